"""Semi-tensor products and semi-tensor additions.

Every operator reduces to its classical counterpart when the classical
dimension-matching condition holds.
"""
from __future__ import annotations

import numpy as np

from .errors import ShapeError
from .lattice import lcm
from .weights import as_mat, as_vec, bridge, e_col, e_mat, j_mat, ones_col

MM_KINDS = ("type1_left", "type1_right", "type2_left", "type2_right")
STA_KINDS = ("vec_bar", "vec_hat", "sq_bar", "sq_hat", "mat_hat")


def _pad(a: np.ndarray, w: np.ndarray, left: bool) -> np.ndarray:
    if w.shape == (1, 1) and w[0, 0] == 1.0:
        return a
    return np.kron(w, a) if left else np.kron(a, w)


def mm_stp(A, B, kind: str = "type1_left") -> np.ndarray:
    """Matrix-matrix STP.

    ``type1`` pads with identities, ``type2`` with averaging matrices J;
    ``left`` puts the factor matrix first in the Kronecker product.
    """
    A, B = as_mat(A), as_mat(B)
    if kind not in MM_KINDS:
        raise ValueError(f"unknown MM-STP kind {kind!r}")
    n, p = A.shape[1], B.shape[0]
    t = lcm(n, p)
    pad = np.eye if kind.startswith("type1") else j_mat
    right = kind.endswith("right")
    return _pad(A, pad(t // n), right) @ _pad(B, pad(t // p), right)


def ltimes(A, B) -> np.ndarray:
    return mm_stp(A, B, "type1_left")


def rtimes(A, B) -> np.ndarray:
    return mm_stp(A, B, "type1_right")


def circ(A, B) -> np.ndarray:
    return mm_stp(A, B, "type2_left")


def mv_stp(A, x, kind: str = "type1") -> np.ndarray:
    """Matrix-vector STP; the vector is always stretched by all-ones."""
    A, x = as_mat(A), as_vec(x)
    n, p = A.shape[1], x.size
    t = lcm(n, p)
    if kind == "type1":
        pad = np.eye(t // n)
    elif kind == "type2":
        pad = j_mat(t // n)
    else:
        raise ValueError(f"unknown MV-STP kind {kind!r}")
    xs = x if t == p else np.kron(x, np.ones(t // p))
    return _pad(A, pad, False) @ xs


def vv_stp(x, y) -> float:
    x, y = as_vec(x), as_vec(y)
    t = lcm(x.size, y.size)
    return float(np.kron(x, np.ones(t // x.size)) @ np.kron(y, np.ones(t // y.size)))


def dk_stp(A, B, weighted: bool = True) -> np.ndarray:
    """Dimension-keeping STP ``A @ bridge @ B``.

    A 1-D ``B`` is treated as a column vector and the result is 1-D.
    """
    vector_out = np.ndim(B) == 1
    A, B = as_mat(A), as_mat(B)
    out = A @ bridge(A.shape[1], B.shape[0], weighted) @ B
    return out.reshape(-1) if vector_out else out


def dk_stp_factored(A, B, weighted: bool = True) -> np.ndarray:
    """The Kronecker-expanded definition of the DK-STP (used as a cross-check)."""
    A, B = as_mat(A), as_mat(B)
    n, p = A.shape[1], B.shape[0]
    t = lcm(n, p)
    w = e_col if weighted else ones_col
    return np.kron(A, w(t // n).T) @ np.kron(B, w(t // p))


def inflate(A, rows: int, cols: int) -> np.ndarray:
    """``A (x) E_{rows/m x cols/n}``: inflate A to shape (rows, cols)."""
    A = as_mat(A)
    m, n = A.shape
    if rows % m or cols % n:
        raise ShapeError(f"cannot inflate {A.shape} to ({rows}, {cols})")
    a, b = rows // m, cols // n
    if a == 1 and b == 1:
        return A
    return np.kron(A, e_mat(a, b))


def pseudo_stp(A, B) -> np.ndarray:
    A, B = as_mat(A), as_mat(B)
    s = lcm(A.shape[0], B.shape[0])
    t = lcm(A.shape[1], B.shape[1])
    return dk_stp(inflate(A, s, t), inflate(B, s, t), weighted=True)


def _signed(a: np.ndarray, b: np.ndarray, sign: str) -> np.ndarray:
    if sign == "+":
        return a + b
    if sign == "-":
        return a - b
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def sta(u, v, kind: str = "mat_hat", sign: str = "+") -> np.ndarray:
    """Semi-tensor addition/subtraction; the result lives on the lattice join."""
    if kind not in STA_KINDS:
        raise ValueError(f"unknown STA kind {kind!r}")
    if kind.startswith("vec"):
        if np.ndim(u) != 1 or np.ndim(v) != 1:
            raise ShapeError(f"{kind} needs two vectors")
        x, y = as_vec(u), as_vec(v)
        t = lcm(x.size, y.size)
        if kind == "vec_bar":
            return _signed(np.kron(x, np.ones(t // x.size)), np.kron(y, np.ones(t // y.size)), sign)
        return _signed(
            np.kron(x, e_col(t // x.size).ravel()), np.kron(y, e_col(t // y.size).ravel()), sign
        )
    A, B = as_mat(u), as_mat(v)
    if kind == "mat_hat":
        s = lcm(A.shape[0], B.shape[0])
        t = lcm(A.shape[1], B.shape[1])
        return _signed(inflate(A, s, t), inflate(B, s, t), sign)
    if A.shape[0] != A.shape[1] or B.shape[0] != B.shape[1]:
        raise ShapeError(f"{kind} needs square matrices, got {A.shape} and {B.shape}")
    m, n = A.shape[0], B.shape[0]
    t = lcm(m, n)
    pad = np.eye if kind == "sq_bar" else j_mat
    return _signed(_pad(A, pad(t // m), False), _pad(B, pad(t // n), False), sign)


def hadd(A, B) -> np.ndarray:
    return sta(A, B, "mat_hat", "+")


def hsub(A, B) -> np.ndarray:
    return sta(A, B, "mat_hat", "-")


def badd(x, y) -> np.ndarray:
    """Bar addition: all-ones stretching for vectors, identity padding for square matrices."""
    if np.ndim(x) == 1 and np.ndim(y) == 1:
        return sta(x, y, "vec_bar", "+")
    return sta(x, y, "sq_bar", "+")


def bsub(x, y) -> np.ndarray:
    if np.ndim(x) == 1 and np.ndim(y) == 1:
        return sta(x, y, "vec_bar", "-")
    return sta(x, y, "sq_bar", "-")
