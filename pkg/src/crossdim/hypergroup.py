"""Squaring map and symmetric/alternating split, with the spectral data they induce."""
from __future__ import annotations

import numpy as np

from .errors import NonConvergent
from .lattice import lcm
from .poly import Poly, charpoly
from .stp import inflate, sta
from .weights import as_mat


def box(A) -> np.ndarray:
    """Square up A (m x n) to ``A (x) E_{t/m x t/n}`` with t = lcm(m, n)."""
    A = as_mat(A)
    t = lcm(*A.shape)
    return inflate(A, t, t)


def sym_alt(A, mode: str = "symmetrize") -> np.ndarray:
    A = as_mat(A)
    if mode == "symmetrize":
        return 0.5 * sta(A, A.T, "mat_hat", "+")
    if mode == "alternate":
        return 0.5 * sta(A, A.T, "mat_hat", "-")
    raise ValueError(f"mode must be 'symmetrize' or 'alternate', got {mode!r}")


def is_sym_skew(A, mode: str = "symmetric", tol: float = 1e-9) -> bool:
    S = box(A)
    if mode == "symmetric":
        return bool(np.max(np.abs(S - S.T)) <= tol)
    if mode == "skew":
        return bool(np.max(np.abs(S + S.T)) <= tol)
    raise ValueError(f"mode must be 'symmetric' or 'skew', got {mode!r}")


def s_char_poly(A) -> Poly:
    return charpoly(box(A))


def s_spectrum(A) -> list[tuple[complex, np.ndarray]]:
    S = box(A)
    try:
        vals, vecs = np.linalg.eig(S)
    except np.linalg.LinAlgError as exc:
        raise NonConvergent(f"eigensolver failed on a {S.shape} squaring matrix") from exc
    scale = max(np.linalg.norm(S, 2), 1.0)
    pairs = []
    for i, lam in enumerate(vals):
        v = vecs[:, i]
        if np.linalg.norm(S @ v - lam * v) > 1e-8 * scale:
            # LAPACK balancing can spoil eigenvectors of badly scaled inputs;
            # fall back to the smallest right singular vector of S - lam I.
            v = np.linalg.svd(S - lam * np.eye(S.shape[0]))[2][-1].conj()
            if np.linalg.norm(S @ v - lam * v) > 1e-8 * scale:
                raise NonConvergent(f"eigenpair {i} residual above tolerance")
        pairs.append((complex(lam), v))
    return pairs


def box_trace(A) -> float:
    return float(np.trace(box(A)))
