"""The Lie algebra gl(m x n) under the DK-STP and its group GL(m x n).

Elements of the extended ring are ``a I_{m x n} + A0`` where ``I_{m x n}``
is a formal identity for the DK-STP; see :class:`ExtMat`.  Every operation
that touches a bridge matrix takes ``weighted`` (E-weighted bridge by
default, all-ones bridge when False).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import NonConvergent, NotInvertible, ShapeError
from .hypergroup import box
from .lattice import Shape, lcm
from .poly import Poly, charpoly
from .stp import dk_stp, hadd, hsub, inflate, pseudo_stp
from .weights import as_mat, bridge

CRITERION_EPS = 1e-10


@dataclass(frozen=True, eq=False)
class ExtMat:
    """``scalar * I_{m x n} + body``."""

    scalar: float
    body: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "scalar", float(self.scalar))
        object.__setattr__(self, "body", as_mat(self.body))

    @classmethod
    def identity(cls, m: int, n: int) -> "ExtMat":
        return cls(1.0, np.zeros((m, n)))

    @property
    def shape(self) -> Shape:
        return Shape(*self.body.shape)

    def collapse(self) -> np.ndarray:
        """The ordinary matrix ``a I + A0``; only defined for square shapes."""
        m, n = self.shape
        if m != n:
            raise ShapeError(f"ExtMat of shape {self.shape} is not a matrix unless scalar == 0")
        return self.scalar * np.eye(m) + self.body


def restricted_form(A, weighted: bool = True) -> np.ndarray:
    """The m x m matrix ``A @ bridge(n, m)``; ``A dk x == restricted_form(A) @ x``."""
    A = as_mat(A)
    m, n = A.shape
    return A @ bridge(n, m, weighted)


def bracket(A, B, kind: str = "dk", weighted: bool = True) -> np.ndarray:
    A, B = as_mat(A), as_mat(B)
    if kind == "dk":
        if A.shape != B.shape:
            raise ShapeError(f"dk bracket needs equal shapes, got {A.shape} and {B.shape}")
        return dk_stp(A, B, weighted) - dk_stp(B, A, weighted)
    if kind == "pseudo":
        return hsub(pseudo_stp(A, B), pseudo_stp(B, A))
    raise ValueError(f"kind must be 'dk' or 'pseudo', got {kind!r}")


def char_poly(A, weighted: bool = True) -> Poly:
    """Degree-m characteristic polynomial of the restricted form."""
    return charpoly(restricted_form(A, weighted))


def _annihilating_poly(A: np.ndarray, weighted: bool) -> Poly:
    # When n < m the n x n matrix bridge @ A has the same nonzero spectrum
    # and a lower-degree characteristic polynomial that also kills A.
    m, n = A.shape
    if n < m:
        return charpoly(bridge(n, m, weighted) @ A)
    return char_poly(A, weighted)


def dk_power(A, k: int, weighted: bool = True):
    """k-fold DK-STP power; ``k == 0`` gives the formal identity as an ExtMat."""
    A = as_mat(A)
    if k < 0:
        raise ValueError("power must be nonnegative")
    if k == 0:
        return ExtMat.identity(*A.shape)
    P = restricted_form(A, weighted)
    return np.linalg.matrix_power(P, k - 1) @ A


def cayley_hamilton_residual(A, weighted: bool = True) -> np.ndarray:
    """``A^<m+1> + c_{m-1} A^<m> + ... + c_0 A`` for the degree-m characteristic polynomial."""
    A = as_mat(A)
    p = char_poly(A, weighted)
    out = np.zeros_like(A)
    for j, c in enumerate(p.coeffs):
        out = out + c * dk_power(A, j + 1, weighted)
    return out


def ext_ops(X: ExtMat, Y: ExtMat, op: str = "mul", weighted: bool = True) -> ExtMat:
    if X.shape != Y.shape:
        raise ShapeError(f"ExtMat shapes differ: {X.shape} vs {Y.shape}; use hyper_gl_mul")
    if op == "add":
        return ExtMat(X.scalar + Y.scalar, X.body + Y.body)
    if op == "mul":
        body = X.scalar * Y.body + Y.scalar * X.body + dk_stp(X.body, Y.body, weighted)
        return ExtMat(X.scalar * Y.scalar, body)
    raise ValueError(f"op must be 'add' or 'mul', got {op!r}")


def inverse_coefficients(A0, weighted: bool = True) -> tuple[np.ndarray, float, Poly]:
    """Coefficients ``x_1..x_{k-1}`` of ``B0 = sum x_i A0^<i>`` inverting ``I + A0``.

    Returns ``(x, criterion, poly)``.  With the annihilating polynomial
    ``x^{k-1} + c_{k-1} x^{k-2} + ... + c_1`` the recursion gives
    ``x_j = alpha_j x_{k-1} + (-1)^j`` with ``alpha_1 = c_1`` and
    ``alpha_j = c_j - alpha_{j-1}``; the element is invertible iff
    ``criterion = alpha_{k-1} - 1`` is nonzero.
    """
    A0 = as_mat(A0)
    poly = _annihilating_poly(A0, weighted)
    c = poly.coeffs[:-1]  # c[j-1] is c_j in the docstring numbering
    km1 = len(c)
    alpha = np.empty(km1)
    beta = np.empty(km1)
    alpha[0], beta[0] = c[0], -1.0
    for j in range(1, km1):
        alpha[j] = c[j] - alpha[j - 1]
        beta[j] = -beta[j - 1]
    criterion = float(alpha[-1] - 1.0)
    if abs(criterion) <= CRITERION_EPS:
        return np.full(km1, np.nan), criterion, poly
    x_last = -beta[-1] / criterion
    x = alpha * x_last + beta
    x[-1] = x_last
    return x, criterion, poly


def _inverse_system(A0: np.ndarray, weighted: bool) -> np.ndarray:
    # Row-major vec of (I + Pi) B0 is (I_m + Pi) (x) I_n applied to vec(B0).
    m, n = A0.shape
    return np.kron(np.eye(m) + restricted_form(A0, weighted), np.eye(n))


def ext_invert(X: ExtMat, method: str = "closed_form", weighted: bool = True) -> ExtMat:
    """Inverse in the extended ring; raises :class:`NotInvertible`."""
    if X.scalar == 0.0:
        raise NotInvertible("the identity coefficient is zero", criterion=0.0)
    a = X.scalar
    A0 = X.body / a
    m, n = A0.shape
    if method == "closed_form":
        x, criterion, _ = inverse_coefficients(A0, weighted)
        if abs(criterion) <= CRITERION_EPS:
            raise NotInvertible(
                f"invertibility criterion {criterion:.3e} is zero within {CRITERION_EPS:g}",
                criterion=criterion,
            )
        B0 = np.zeros_like(A0)
        power = A0
        P = restricted_form(A0, weighted)
        for coef in x:
            B0 = B0 + coef * power
            power = P @ power
    elif method == "linear_solve":
        K = _inverse_system(A0, weighted)
        det_small = float(np.linalg.det(np.eye(m) + restricted_form(A0, weighted)))
        if abs(det_small) <= CRITERION_EPS or np.linalg.cond(K) > 1e14:
            raise NotInvertible(
                f"linear system is singular (det = {det_small:.3e})", criterion=det_small
            )
        B0 = np.linalg.solve(K, -A0.reshape(-1)).reshape(m, n)
    else:
        raise ValueError(f"method must be 'closed_form' or 'linear_solve', got {method!r}")
    return ExtMat(1.0 / a, B0 / a)


def invert_residual(X: ExtMat, Y: ExtMat, weighted: bool = True) -> float:
    """Max-norm distance of both ``X Y`` and ``Y X`` from the identity."""
    left, right = ext_ops(X, Y, "mul", weighted), ext_ops(Y, X, "mul", weighted)
    return max(
        abs(left.scalar - 1.0),
        abs(right.scalar - 1.0),
        float(np.max(np.abs(left.body))),
        float(np.max(np.abs(right.body))),
    )


def relative_inverse(A, weighted: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """Diagnostic ``(I^A, A^<-1>)`` with ``A dk I^A == A`` and ``A dk A^<-1> == I^A``.

    Needs a nonzero constant term in the characteristic polynomial.
    """
    A = as_mat(A)
    c = char_poly(A, weighted).coeffs
    m = len(c) - 1
    if abs(c[0]) <= CRITERION_EPS:
        raise NotInvertible("constant term of the characteristic polynomial is zero", c[0])
    rel_id = sum(c[j] * dk_power(A, j, weighted) for j in range(1, m + 1)) / -c[0]
    inv = dk_power(A, m - 1, weighted) if m > 1 else np.zeros_like(A)
    if m == 1:
        inv = c[1] * rel_id
    else:
        for j in range(2, m):
            inv = inv + c[j] * dk_power(A, j - 1, weighted)
        inv = inv + c[1] * rel_id
    return rel_id, inv / -c[0]


def _series_done(term: np.ndarray, total: np.ndarray, tol: float) -> bool:
    return float(np.max(np.abs(term))) <= tol * max(1.0, float(np.max(np.abs(total))))


def ext_exp(B, max_terms: int = 200, tol: float = 1e-16, weighted: bool = True) -> ExtMat:
    """``I + sum_k B^<k> / k!``."""
    B = as_mat(B)
    P = restricted_form(B, weighted)
    total = np.zeros_like(B)
    term = B.copy()
    for k in range(1, max_terms + 1):
        total = total + term
        if _series_done(term, total, tol):
            return ExtMat(1.0, total)
        term = P @ term / (k + 1)
    raise NonConvergent(f"exp series not converged after {max_terms} terms")


def ext_log(X: ExtMat, max_terms: int = 2000, tol: float = 1e-16, weighted: bool = True) -> np.ndarray:
    """``sum_i (-1)^(i-1) B^<i> / i`` for ``X = I + B``.

    The series converges when the restricted form of B has spectral radius
    below one; outside that region :class:`NonConvergent` is raised.
    """
    if X.scalar != 1.0:
        raise ValueError("log needs an identity coefficient of exactly 1")
    B = X.body
    P = restricted_form(B, weighted)
    rho = float(np.max(np.abs(np.linalg.eigvals(P))))
    if rho >= 1.0:
        raise NonConvergent(f"spectral radius {rho:.3f} >= 1: log series diverges")
    total = np.zeros_like(B)
    power = B.copy()
    for i in range(1, max_terms + 1):
        term = ((-1) ** (i - 1) / i) * power
        total = total + term
        if _series_done(term, total, tol):
            return total
        power = P @ power
    raise NonConvergent(f"log series not converged after {max_terms} terms")


def ext_exp_log(value, op: str, max_terms: int | None = None, tol: float = 1e-16, weighted: bool = True):
    if op == "exp":
        return ext_exp(value, max_terms or 200, tol, weighted)
    if op == "log":
        return ext_log(value, max_terms or 2000, tol, weighted)
    raise ValueError(f"op must be 'exp' or 'log', got {op!r}")


def ideal_member(A, which: str = "Q", weighted: bool = True, tol: float = 1e-9) -> bool:
    """Membership in the trace ideal Q or the scalar ideal Z of gl(m x n)."""
    P = restricted_form(A, weighted)
    if which == "Q":
        return bool(abs(np.trace(P)) <= tol)
    if which == "Z":
        r = np.trace(P) / P.shape[0]
        return bool(np.max(np.abs(P - r * np.eye(P.shape[0]))) <= tol)
    raise ValueError(f"which must be 'Q' or 'Z', got {which!r}")


def z_basis(m: int, n: int, weighted: bool = True) -> list[np.ndarray]:
    """Basis of ``{A in M_{m x n} : A bridge(n, m) = r I_m for some r}``.

    Computed as a null space, so it works for any (m, n); for m <= n its size
    is (n - m) m + 1.
    """
    psi = bridge(n, m, weighted)
    K = np.hstack([np.kron(np.eye(m), psi.T), -np.eye(m).reshape(-1, 1)])
    null = scipy.linalg.null_space(K)
    return [null[: m * n, j].reshape(m, n) for j in range(null.shape[1])]


def gm_residual(A, M) -> np.ndarray:
    A, M = as_mat(A), as_mat(M)
    return hadd(pseudo_stp(A, M), pseudo_stp(M, A.T))


def gm_residual_box(A, M) -> np.ndarray:
    """Same test through squaring: ``box(A pstp M) + box(M pstp A^T)``."""
    A, M = as_mat(A), as_mat(M)
    return box(pseudo_stp(A, M)) + box(pseudo_stp(M, A.T))


def gm_member(A, M, tol: float = 1e-9) -> bool:
    return bool(np.max(np.abs(gm_residual(A, M))) <= tol)


def hyper_gl_mul(X: ExtMat, Y: ExtMat) -> ExtMat:
    """Cross-shape product; the result lives on the join of both shapes."""
    (m, n), (p, q) = X.shape, Y.shape
    s, t = lcm(m, p), lcm(n, q)
    body = (
        X.scalar * inflate(Y.body, s, t)
        + Y.scalar * inflate(X.body, s, t)
        + pseudo_stp(X.body, Y.body)
    )
    return ExtMat(X.scalar * Y.scalar, body)
