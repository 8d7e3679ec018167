"""Reduction to irreducible representatives and the equivalence predicates.

A vector or matrix is reducible when it is a Kronecker inflation of a
smaller one by a weight pattern.  Reduction searches divisors in ascending
order of the representative's size, so the first hit is the minimal one.
Representatives are recovered by block means, which absorbs sub-tolerance
noise.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .lattice import divisors_ascending, lcm
from .perm import Perm, perm_matrix
from .weights import as_mat, as_vec, e_mat, j_mat

DEFAULT_TOL = 1e-9
RELATIONS = ("vec_J", "vec_E", "sq_I", "sq_J", "mat_E", "perm_right")


@dataclass(frozen=True)
class Reduction:
    """``original == representative (x) W`` for the relation's weight W.

    For vectors ``col_factor`` is 1; square weights (I, J) repeat
    ``row_factor`` in ``col_factor``.
    """

    representative: np.ndarray
    row_factor: int
    col_factor: int = 1


def _vec_weight(k: int, weight: str) -> np.ndarray:
    if weight == "ones":
        return np.ones(k)
    if weight == "E":
        return np.full(k, 1.0 / np.sqrt(k))
    raise ValueError(f"vector weight must be 'ones' or 'E', got {weight!r}")


def reduce_vec(x, tol: float = DEFAULT_TOL, weight: str = "ones") -> Reduction:
    """Smallest ``z`` with ``x == z (x) W_k`` (W = all-ones or E) within ``tol``."""
    x = as_vec(x)
    _vec_weight(1, weight)
    m = x.size
    for s in divisors_ascending(m):
        k = m // s
        blocks = x.reshape(s, k)
        z = blocks.mean(axis=1)
        if weight == "E":
            z = z * np.sqrt(k)
        if np.max(np.abs(np.kron(z, _vec_weight(k, weight)) - x)) <= tol:
            return Reduction(z, k, 1)
    raise AssertionError("unreachable: s = m always succeeds")


def _blocks(A: np.ndarray, r: int, s: int) -> np.ndarray:
    """View A (m x n) as an (r, a, s, b) array of a x b blocks."""
    m, n = A.shape
    return A.reshape(r, m // r, s, n // s)


def _mat_weight(kind: str, a: int, b: int) -> np.ndarray:
    if kind == "I":
        return np.eye(a)
    if kind == "J":
        return j_mat(a)
    return e_mat(a, b)


def _fit(A: np.ndarray, kind: str, r: int, s: int) -> np.ndarray:
    m, n = A.shape
    a, b = m // r, n // s
    blk = _blocks(A, r, s)
    if kind == "I":
        return np.trace(blk, axis1=1, axis2=3) / a
    scale = a if kind == "J" else np.sqrt(a * b)
    return blk.mean(axis=(1, 3)) * scale


def reduce_mat(A, weight: str = "E", tol: float = DEFAULT_TOL, side: str = "left") -> Reduction:
    """Minimal ``C`` with ``A == C (x) W`` (``side='left'``) or ``W (x) C`` (``'right'``).

    ``weight`` is ``"I"``, ``"J"`` (square A only) or ``"E"``.  For E the
    row and column factors are independent, so the lexicographically
    smallest representative shape is also the smallest in both coordinates.
    """
    A = as_mat(A)
    m, n = A.shape
    if weight not in ("I", "J", "E"):
        raise ValueError(f"unknown matrix weight {weight!r}")
    if weight in ("I", "J") and m != n:
        raise ShapeError(f"weight {weight} needs a square matrix, got {A.shape}")
    if side == "right":
        if weight != "I":
            raise ValueError("right-factor reduction is only defined for weight I")
        return _reduce_right_identity(A, tol)

    if weight == "E":
        pairs = [(r, s) for r in divisors_ascending(m) for s in divisors_ascending(n)]
    else:
        pairs = [(r, r) for r in divisors_ascending(m)]
    for r, s in pairs:
        C = _fit(A, weight, r, s)
        a, b = m // r, n // s
        if np.max(np.abs(np.kron(C, _mat_weight(weight, a, b)) - A)) <= tol:
            return Reduction(C, a, b)
    raise AssertionError("unreachable: (m, n) always succeeds")


def _reduce_right_identity(A: np.ndarray, tol: float) -> Reduction:
    m = A.shape[0]
    for r in divisors_ascending(m):
        k = m // r
        # I_k (x) C is block diagonal with k copies of the r x r block C
        blk = A.reshape(k, r, k, r)
        C = np.einsum("iaib->ab", blk) / k
        if np.max(np.abs(np.kron(np.eye(k), C) - A)) <= tol:
            return Reduction(C, k, k)
    raise AssertionError("unreachable")


def _stretch_vec(x: np.ndarray, t: int, weight: str) -> np.ndarray:
    return np.kron(x, _vec_weight(t // x.size, weight))


def _stretched_pair(u, v, relation: str) -> tuple[np.ndarray, np.ndarray]:
    if relation in ("vec_J", "vec_E"):
        x, y = as_vec(u), as_vec(v)
        t = lcm(x.size, y.size)
        w = "ones" if relation == "vec_J" else "E"
        return _stretch_vec(x, t, w), _stretch_vec(y, t, w)
    if relation == "perm_right":
        A, B = _perm_carrier(u), _perm_carrier(v)
        t = lcm(A.shape[0], B.shape[0])
        return np.kron(np.eye(t // A.shape[0]), A), np.kron(np.eye(t // B.shape[0]), B)
    A, B = as_mat(u), as_mat(v)
    if relation in ("sq_I", "sq_J"):
        if A.shape[0] != A.shape[1] or B.shape[0] != B.shape[1]:
            raise ShapeError(f"{relation} needs square matrices")
        t = lcm(A.shape[0], B.shape[0])
        w = "I" if relation == "sq_I" else "J"
        ka, kb = t // A.shape[0], t // B.shape[0]
        return np.kron(A, _mat_weight(w, ka, ka)), np.kron(B, _mat_weight(w, kb, kb))
    s, t = lcm(A.shape[0], B.shape[0]), lcm(A.shape[1], B.shape[1])
    return (
        np.kron(A, e_mat(s // A.shape[0], t // A.shape[1])),
        np.kron(B, e_mat(s // B.shape[0], t // B.shape[1])),
    )


def _perm_carrier(u) -> np.ndarray:
    if isinstance(u, Perm):
        return perm_matrix(u)
    A = as_mat(u)
    if A.shape[0] != A.shape[1]:
        raise ShapeError("perm_right needs permutations or square permutation matrices")
    return A


def _representative(u, relation: str, tol: float) -> np.ndarray:
    if relation == "vec_J":
        return reduce_vec(u, tol, "ones").representative
    if relation == "vec_E":
        return reduce_vec(u, tol, "E").representative
    if relation == "perm_right":
        return reduce_mat(_perm_carrier(u), "I", tol, side="right").representative
    weight = {"sq_I": "I", "sq_J": "J", "mat_E": "E"}[relation]
    return reduce_mat(u, weight, tol).representative


def equivalent_by_stretch(u, v, relation: str, tol: float = DEFAULT_TOL) -> bool:
    a, b = _stretched_pair(u, v, relation)
    return bool(np.max(np.abs(a - b)) <= tol)


def equivalent_by_reduction(u, v, relation: str, tol: float = DEFAULT_TOL) -> bool:
    a, b = _representative(u, relation, tol), _representative(v, relation, tol)
    return a.shape == b.shape and bool(np.max(np.abs(a - b)) <= tol)


def _check_carrier(u, relation: str) -> None:
    if relation in ("vec_J", "vec_E"):
        if np.ndim(u) != 1:
            raise ShapeError(f"{relation} compares vectors")
    elif relation == "perm_right":
        if not isinstance(u, Perm) and np.ndim(u) != 2:
            raise ShapeError("perm_right compares permutations")
    elif isinstance(u, Perm) or np.ndim(u) != 2:
        raise ShapeError(f"{relation} compares matrices")


def equivalent(u, v, relation: str, tol: float = DEFAULT_TOL) -> bool:
    """Decide equivalence by comparing the stretched forms.

    The reduction route (compare minimal representatives) gives the same
    answer for exact inputs; :func:`equivalent_by_reduction` exposes it.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    _check_carrier(u, relation)
    _check_carrier(v, relation)
    return equivalent_by_stretch(u, v, relation, tol)
