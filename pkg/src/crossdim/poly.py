"""Real polynomials used as characteristic functions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg


@dataclass(frozen=True)
class Poly:
    """Coefficients in ascending order: ``c[0] + c[1] x + ... + c[d] x**d``."""

    coeffs: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def monic(self) -> bool:
        return self.coeffs[-1] == 1.0

    def __call__(self, x):
        out = 0.0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def eval_matrix(self, X: np.ndarray) -> np.ndarray:
        """Horner evaluation with ``X`` substituted for the variable."""
        X = np.asarray(X, dtype=float)
        eye = np.eye(X.shape[0])
        out = np.zeros_like(X)
        for c in reversed(self.coeffs):
            out = out @ X + c * eye
        return out

    def roots(self) -> np.ndarray:
        return np.roots(self.coeffs[::-1])


def charpoly(M: np.ndarray) -> Poly:
    """Monic characteristic polynomial ``det(x I - M)`` of a real square matrix."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"characteristic polynomial needs a square matrix, got {M.shape}")
    # Hessenberg reduction then the determinant recurrence
    #   p_k = (x - h_kk) p_{k-1} - sum_i h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1},
    # which keeps coefficients accurate where eigenvalue products do not.
    n = M.shape[0]
    H = M if n <= 2 else scipy.linalg.hessenberg(M)
    polys = [np.array([1.0])]  # ascending coefficients of p_0, p_1, ...
    for k in range(n):
        p = np.zeros(k + 2)
        p[1:] += polys[k]
        p[:-1] -= H[k, k] * polys[k]
        prod = 1.0
        for i in range(k - 1, -1, -1):
            prod *= H[i + 1, i]
            p[: i + 1] -= H[i, k] * prod * polys[i]
        polys.append(p)
    return Poly(tuple(float(c) for c in polys[n]))
