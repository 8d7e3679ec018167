"""Weight vectors/matrices, Kronecker products and DK bridge matrices.

Matrices are 2-D float ``numpy`` arrays; vectors of R^infinity are 1-D arrays.
"""
from __future__ import annotations

import numpy as np

from .errors import LatticeOverflow, ShapeError
from .lattice import LCM_LIMIT, lcm

WEIGHT_KINDS = ("ones_vec", "e_vec", "e_mat", "j_mat", "identity")


def as_mat(a) -> np.ndarray:
    """Coerce to a finite 2-D float array (1-D input becomes a column)."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or 0 in arr.shape:
        raise ShapeError(f"expected a non-empty matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def as_vec(x) -> np.ndarray:
    """Coerce to a finite 1-D float array; column/row matrices are flattened."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.reshape(-1)
    if arr.ndim != 1 or arr.size == 0:
        raise ShapeError(f"expected a non-empty vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("vector entries must be finite")
    return arr


def ones_col(k: int) -> np.ndarray:
    return np.ones((k, 1))


def e_col(k: int) -> np.ndarray:
    return np.full((k, 1), 1.0 / np.sqrt(k))


def e_mat(m: int, n: int) -> np.ndarray:
    return np.full((m, n), 1.0 / np.sqrt(m * n))


def j_mat(n: int) -> np.ndarray:
    return np.full((n, n), 1.0 / n)


def weight(kind: str, m: int, n: int | None = None) -> np.ndarray:
    """Build one of the standard weights.

    ``ones_vec`` and ``e_vec`` return 1-D vectors; the others return matrices.
    ``n`` is required for ``e_mat`` only.
    """
    if m < 1 or (n is not None and n < 1):
        raise ValueError("weight dimensions must be positive")
    if kind == "ones_vec":
        return np.ones(m)
    if kind == "e_vec":
        return np.full(m, 1.0 / np.sqrt(m))
    if kind == "e_mat":
        if n is None:
            raise ValueError("e_mat needs both m and n")
        return e_mat(m, n)
    if kind == "j_mat":
        return j_mat(m)
    if kind == "identity":
        return np.eye(m)
    raise ValueError(f"unknown weight kind {kind!r}; expected one of {WEIGHT_KINDS}")


def kron(a, b) -> np.ndarray:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if a.ndim == 2 and b.ndim == 2:
        rows, cols = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
        if rows > LCM_LIMIT or cols > LCM_LIMIT:
            raise LatticeOverflow("Kronecker product dimension overflow")
    return np.kron(a, b)


def bridge(n: int, p: int, weighted: bool = True) -> np.ndarray:
    """The n x p bridge matrix with ``A dk B == A @ bridge(n, p) @ B``."""
    t = lcm(n, p)
    left_w = e_col(t // n) if weighted else ones_col(t // n)
    right_w = e_col(t // p) if weighted else ones_col(t // p)
    return np.kron(np.eye(n), left_w.T) @ np.kron(np.eye(p), right_w)
