"""Reproduce the worked examples numerically and print the results.

    python scripts/worked_examples.py
"""
from __future__ import annotations

import numpy as np

from crossdim import geometry, lie
from crossdim.weights import bridge


def bridge_constants() -> None:
    print("bridge(3, 2), all-ones:")
    print(bridge(3, 2, weighted=False))
    print("bridge(3, 2), E-weighted, divided by sqrt(6)/6:")
    print(bridge(3, 2, weighted=True) / (np.sqrt(6) / 6))


def projection_example(xi: np.ndarray) -> None:
    print("projection matrix R^4 -> R^6:")
    print(geometry.projection_matrix(4, 6))
    x0, res = geometry.project(xi, 6)
    print(f"xi       = {xi}")
    print(f"x0       = {x0}")
    print(f"residual = {res}")
    n = geometry.norm
    print(f"|xi|^2 = {n(xi) ** 2:.12g}, |x0|^2 + |res|^2 = {n(x0) ** 2 + n(res) ** 2:.12g}")


def gl23_example(A0: np.ndarray) -> None:
    print("I + A0 in GL(2x3), all-ones bridge, A0 =")
    print(A0)
    print("restricted form:")
    print(lie.restricted_form(A0, weighted=False))
    x, criterion, poly = lie.inverse_coefficients(A0, weighted=False)
    c1, c2 = poly.coeffs[0], poly.coeffs[1]
    print(f"c1 = {c1:.12g}, c2 = {c2:.12g}, criterion = {criterion:.12g}")
    print(f"x1 = {x[0]:.12g} (closed form {(c2 - 1) / (c1 - c2 + 1):.12g})")
    print(f"x2 = {x[1]:.12g} (closed form {1 / (c1 - c2 + 1):.12g})")
    X = lie.ExtMat(1.0, A0)
    Y = lie.ext_invert(X, weighted=False)
    print("inverse body:")
    print(Y.body)
    print(f"residual = {lie.invert_residual(X, Y, weighted=False):.3e}")


def exp_log_example(B: np.ndarray) -> None:
    X = lie.ext_exp(B)
    print("exp of a 2x3 body, then log:")
    print(f"scalar = {X.scalar}, round-trip error = {np.max(np.abs(lie.ext_log(X) - B)):.3e}")


if __name__ == "__main__":
    np.set_printoptions(precision=6, suppress=True)
    bridge_constants()
    print()
    projection_example(np.array([1.0, 2.0, 3.0, 4.0]))
    print()
    gl23_example(np.array([[0.3, -0.2, 0.1], [0.4, 0.5, -0.3]]))
    print()
    exp_log_example(np.array([[0.1, -0.05, 0.02], [0.03, 0.04, -0.1]]))
