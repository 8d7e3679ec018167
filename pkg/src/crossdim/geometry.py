"""Inner-product geometry and projections on R^infinity.

The inner product of x in R^m and y in R^n stretches both to R^t,
t = lcm(m, n), with all-ones blocks and divides the dot product by t, so
equivalent vectors (x ~ x (x) 1_k) have identical inner products.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from .lattice import lcm
from .stp import sta, vv_stp
from .weights import as_vec


def inner(x, y, weighting: str = "bar") -> float:
    """Normalized inner product; ``weighting='hat'`` uses E-stretching instead.

    The E-weighted form is not normalized: it equals n times the default on
    R^n, and it is invariant under E-equivalence rather than all-ones
    equivalence.
    """
    x, y = as_vec(x), as_vec(y)
    if weighting == "bar":
        return vv_stp(x, y) / lcm(x.size, y.size)
    if weighting == "hat":
        t = lcm(x.size, y.size)
        xs = np.kron(x, np.full(t // x.size, 1 / np.sqrt(t // x.size)))
        ys = np.kron(y, np.full(t // y.size, 1 / np.sqrt(t // y.size)))
        return float(xs @ ys)
    raise ValueError(f"weighting must be 'bar' or 'hat', got {weighting!r}")


def norm(x, weighting: str = "bar") -> float:
    return float(np.sqrt(max(inner(x, x, weighting), 0.0)))


def norm_dist(x, y=None, weighting: str = "bar") -> float:
    """Norm of ``x``, or the distance ``||x - y||`` after stretching to a common dimension."""
    if y is None:
        return norm(x, weighting)
    kind = "vec_bar" if weighting == "bar" else "vec_hat"
    return norm(sta(as_vec(x), as_vec(y), kind, "-"), weighting)


def projection_matrix(m: int, n: int) -> np.ndarray:
    """The n x m matrix mapping xi in R^m to its closest point in R^n."""
    t = lcm(m, n)
    a, b = t // n, t // m
    return np.kron(np.eye(n), np.ones((1, a))) @ np.kron(np.eye(m), np.ones((b, 1))) / a


def project(xi, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(x0, residual)``: the projection onto R^n and ``x0 -bar xi`` in R^t."""
    xi = as_vec(xi)
    x0 = projection_matrix(xi.size, n) @ xi
    return x0, sta(x0, xi, "vec_bar", "-")


def sphere_slice(c0, r: float, n: int) -> tuple[np.ndarray, float] | None:
    """Intersection of the sphere S_r(c0) with R^n, or ``None`` when empty."""
    if r <= 0:
        raise ValueError("radius must be positive")
    c0 = as_vec(c0)
    cn = projection_matrix(c0.size, n) @ c0
    h = norm_dist(c0, cn)
    if h > r:
        return None
    return cn, float(np.sqrt(max(r * r - h * h, 0.0)))


def extend_function(h: Callable[[np.ndarray], float], theta: int, z) -> float:
    """Lift a function on R^theta to every R^m with theta | m (zero elsewhere)."""
    z = as_vec(z)
    if z.size % theta:
        return 0.0
    return float(h(projection_matrix(z.size, theta) @ z))


def extend_vector_field(f: Callable[[np.ndarray], np.ndarray], n: int, z) -> np.ndarray:
    """Lift a vector field on R^n to R^m, m = k n, by project / apply / stretch."""
    z = as_vec(z)
    m = z.size
    if m % n:
        return np.zeros(m)
    value = as_vec(f(projection_matrix(m, n) @ z))
    if value.size != n:
        raise ValueError(f"vector field returned dimension {value.size}, expected {n}")
    return projection_matrix(n, m) @ value
