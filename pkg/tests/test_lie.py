import numpy as np
import pytest
import scipy.linalg
from hypothesis import assume, given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from conftest import entries, matrices
from crossdim.errors import NonConvergent, NotInvertible, ShapeError
from crossdim.hypergroup import box, box_trace
from crossdim.lie import (
    ExtMat,
    _inverse_system,
    bracket,
    cayley_hamilton_residual,
    char_poly,
    dk_power,
    ext_exp,
    ext_exp_log,
    ext_invert,
    ext_log,
    ext_ops,
    gm_member,
    gm_residual,
    gm_residual_box,
    hyper_gl_mul,
    ideal_member,
    inverse_coefficients,
    invert_residual,
    relative_inverse,
    restricted_form,
    z_basis,
)
from crossdim.stp import dk_stp, inflate
from crossdim.weights import bridge, e_mat

mats23 = arrays(np.float64, (2, 3), elements=entries)


def example_quantities(A0):
    (a11, a12, a13), (a21, a22, a23) = A0
    c2 = -(2 * a11 + a12 + a22 + 2 * a23)
    c1 = (2 * a11 + a12) * (a22 + 2 * a23) - (2 * a21 + a22) * (a12 + 2 * a13)
    alpha, beta = 2 * a11 + a12 + 1, a12 + 2 * a13
    gamma, delta = 2 * a21 + a22, 2 * a23 + a22 + 1
    return c1, c2, alpha, beta, gamma, delta


# -- worked 2 x 3 example, unweighted bridge --------------------------------


@given(mats23)
def test_example_restricted_form_and_poly(A0):
    (a11, a12, a13), (a21, a22, a23) = A0
    expected = np.array([[2 * a11 + a12, a12 + 2 * a13], [2 * a21 + a22, a22 + 2 * a23]])
    np.testing.assert_allclose(restricted_form(A0, weighted=False), expected, atol=1e-14)
    c1, c2, *_ = example_quantities(A0)
    p = char_poly(A0, weighted=False)
    assert p.degree == 2
    np.testing.assert_allclose(p.coeffs, [c1, c2, 1.0], atol=1e-10)


@given(mats23)
def test_example_inverse_coefficients(A0):
    c1, c2, alpha, beta, gamma, delta = example_quantities(A0)
    assume(abs(c2 - c1 - 1) > 1e-3)
    x, criterion, _ = inverse_coefficients(A0, weighted=False)
    np.testing.assert_allclose(x, [(c2 - 1) / (c1 - c2 + 1), 1 / (c1 - c2 + 1)], rtol=1e-8, atol=1e-10)
    assert abs(criterion) == pytest.approx(abs(c2 - c1 - 1), abs=1e-10)
    assert alpha * delta - beta * gamma == pytest.approx(-(c2 - c1 - 1), abs=1e-10)
    K = np.block([[alpha * np.eye(3), beta * np.eye(3)], [gamma * np.eye(3), delta * np.eye(3)]])
    np.testing.assert_allclose(_inverse_system(A0, weighted=False), K, atol=1e-14)
    X = ExtMat(1.0, A0)
    B0 = ext_invert(X, "closed_form", weighted=False).body
    np.testing.assert_allclose(B0, x[1] * dk_power(A0, 2, False) + x[0] * A0, atol=1e-9)
    np.testing.assert_allclose(A0 + B0 + dk_stp(A0, B0, False), 0, atol=1e-8)


def test_not_invertible_on_criterion_zero():
    A0 = np.array([[0.3, -0.2, 0.1], [0.4, 0.5, 0.0]])
    # solve c2 - c1 - 1 = 0 for a13, which enters c1 linearly
    def crit(a13):
        B = A0.copy()
        B[0, 2] = a13
        c1, c2, *_ = example_quantities(B)
        return c2 - c1 - 1

    f0, f1 = crit(0.0), crit(1.0)
    A0[0, 2] = -f0 / (f1 - f0)
    assert abs(crit(A0[0, 2])) < 1e-12
    for method in ("closed_form", "linear_solve"):
        with pytest.raises(NotInvertible) as info:
            ext_invert(ExtMat(1.0, A0), method, weighted=False)
        assert abs(info.value.criterion) < 1e-9
    with pytest.raises(NotInvertible):
        ext_invert(ExtMat(0.0, A0))


# -- basic ops ------------------------------------------------------------------


def test_square_degeneracy(rng):
    A = rng.normal(size=(3, 3))
    np.testing.assert_array_equal(restricted_form(A), A)
    np.testing.assert_allclose(char_poly(A).coeffs, np.poly(A)[::-1], atol=1e-12)
    B = rng.normal(size=(3, 3))
    np.testing.assert_allclose(bracket(A, B), A @ B - B @ A, atol=1e-14)
    X, Y = ExtMat(2.0, A), ExtMat(-1.0, B)
    np.testing.assert_allclose(ext_ops(X, Y).collapse(), X.collapse() @ Y.collapse(), atol=1e-12)
    np.testing.assert_allclose(ext_invert(X).collapse(), np.linalg.inv(X.collapse()), atol=1e-10)
    Bs = 0.3 * B / np.linalg.norm(B, 2)
    np.testing.assert_allclose(ext_exp(Bs).collapse(), scipy.linalg.expm(Bs), atol=1e-12)
    np.testing.assert_allclose(ext_log(ExtMat(1.0, Bs)), scipy.linalg.logm(np.eye(3) + Bs).real, atol=1e-10)


def test_dk_power_and_identity(rng):
    A = rng.normal(size=(2, 3))
    I = dk_power(A, 0)
    assert I.scalar == 1.0 and not I.body.any()
    np.testing.assert_array_equal(dk_power(A, 1), A)
    np.testing.assert_allclose(dk_power(A, 2), A @ bridge(3, 2) @ A, atol=1e-14)
    for j in range(1, 4):
        for k in range(1, 4):
            np.testing.assert_allclose(dk_power(A, j + k), dk_stp(dk_power(A, j), dk_power(A, k)), atol=1e-10)
    X = ExtMat(0.5, A)
    out = ext_ops(X, ExtMat.identity(2, 3))
    assert out.scalar == X.scalar
    np.testing.assert_array_equal(out.body, X.body)
    with pytest.raises(ShapeError):
        ext_ops(X, ExtMat.identity(3, 2))
    with pytest.raises(ShapeError):
        X.collapse()
    with pytest.raises(ValueError):
        dk_power(A, -1)


def test_bracket_errors(rng):
    with pytest.raises(ShapeError):
        bracket(np.ones((2, 3)), np.ones((3, 2)))
    with pytest.raises(ValueError):
        bracket(np.ones((2, 3)), np.ones((2, 3)), "other")
    assert bracket(np.ones((2, 3)), np.ones((3, 2)), "pseudo").shape == (6, 6)


def test_exp_zero_is_identity():
    X = ext_exp(np.zeros((2, 3)))
    assert X.scalar == 1.0
    np.testing.assert_array_equal(X.body, np.zeros((2, 3)))
    Y = ext_exp_log(np.zeros((3, 2)), "exp")
    assert Y.scalar == 1.0 and not Y.body.any()


def test_log_outside_region(rng):
    with pytest.raises(NonConvergent):
        ext_log(ExtMat(1.0, 3 * np.eye(2)))
    with pytest.raises(ValueError):
        ext_log(ExtMat(2.0, np.zeros((2, 2))))
    with pytest.raises(NonConvergent):
        ext_exp(rng.normal(size=(2, 3)) * 50, max_terms=5)
    with pytest.raises(ValueError):
        ext_exp_log(np.zeros((2, 2)), "sqrt")


# -- ideals ---------------------------------------------------------------------


def test_ideal_examples():
    Z = np.sqrt(6) * np.array([[1.5, -2.0, 1.0], [1.0, -2.0, 1.5]])
    assert ideal_member(Z, "Z")
    np.testing.assert_allclose(restricted_form(Z), np.eye(2), atol=1e-12)
    zero = np.zeros((2, 3))
    assert ideal_member(zero, "Q") and ideal_member(zero, "Z")
    with pytest.raises(ValueError):
        ideal_member(zero, "R")


@pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (3, 3), (2, 3), (2, 4), (3, 4), (1, 5), (2, 6)])
@pytest.mark.parametrize("weighted", [True, False])
def test_z_basis(m, n, weighted):
    basis = z_basis(m, n, weighted)
    assert len(basis) == (n - m) * m + 1
    for A in basis:
        assert ideal_member(A, "Z", weighted)
    if m == n:
        A = basis[0] / basis[0][0, 0]
        np.testing.assert_allclose(A, np.eye(m), atol=1e-12)


@given(matrices(), matrices())
def test_bracket_in_Q(A, B):
    B = np.resize(B, A.shape)
    assert ideal_member(bracket(A, B), "Q", tol=1e-10)


# -- Lie algebra laws -------------------------------------------------------------


@given(matrices())
def test_bracket_skew(A):
    np.testing.assert_array_equal(bracket(A, A), 0)
    B = np.resize(A[::-1], A.shape) + 0.25
    np.testing.assert_allclose(bracket(A, B), -bracket(B, A), atol=0)
    np.testing.assert_allclose(bracket(2 * A + B, B), 2 * bracket(A, B), atol=1e-12)


@given(matrices(), st.data())
def test_jacobi(A, data):
    B = data.draw(arrays(np.float64, A.shape, elements=entries))
    C = data.draw(arrays(np.float64, A.shape, elements=entries))
    for w in (True, False):
        br = lambda X, Y: bracket(X, Y, weighted=w)
        np.testing.assert_allclose(br(A, br(B, C)) + br(B, br(C, A)) + br(C, br(A, B)), 0, atol=1e-9)


@given(matrices(), st.integers(1, 3), st.integers(1, 3), st.data())
def test_inflation_homomorphism(A, a, b, data):
    B = data.draw(arrays(np.float64, A.shape, elements=entries))
    pi = lambda X: np.kron(X, e_mat(a, b))
    np.testing.assert_allclose(dk_stp(pi(A), pi(B)), pi(dk_stp(A, B)), atol=1e-9)
    np.testing.assert_allclose(bracket(pi(A), pi(B)), pi(bracket(A, B)), atol=1e-9)


@given(matrices(rows=st.integers(1, 4), cols=st.integers(1, 6)), st.booleans())
def test_cayley_hamilton(A, weighted):
    scale = 1 + np.max(np.abs(A)) * np.linalg.norm(restricted_form(A, weighted), 2) ** A.shape[0]
    assert np.max(np.abs(cayley_hamilton_residual(A, weighted))) <= 1e-7 * scale


@given(matrices(), st.booleans(), st.floats(0.5, 2.0))
def test_inverse_methods_agree(A0, weighted, a):
    _, crit, _ = inverse_coefficients(A0 / a, weighted)
    assume(abs(crit) > 1e-3)
    X = ExtMat(a, A0)
    Y1 = ext_invert(X, "closed_form", weighted)
    Y2 = ext_invert(X, "linear_solve", weighted)
    assert Y1.scalar == pytest.approx(1 / a)
    np.testing.assert_allclose(Y1.body, Y2.body, atol=1e-7 * max(1.0, np.max(np.abs(Y2.body))))
    assert invert_residual(X, Y1, weighted) <= 1e-8 * max(1.0, np.max(np.abs(Y1.body)))


@given(matrices(), matrices(), matrices())
def test_ext_mul_associative(A, B, C):
    B, C = np.resize(B, A.shape), np.resize(C, A.shape)
    X, Y, Z = ExtMat(1.5, A), ExtMat(-0.5, B), ExtMat(2.0, C)
    left = ext_ops(ext_ops(X, Y), Z)
    right = ext_ops(X, ext_ops(Y, Z))
    assert left.scalar == pytest.approx(right.scalar)
    np.testing.assert_allclose(left.body, right.body, atol=1e-9)
    s = ext_ops(X, Y, "add")
    np.testing.assert_allclose(s.body, A + B)


@given(mats23)
def test_exp_log_round_trip(B):
    rho = np.linalg.norm(restricted_form(B), 2)
    if rho > 0.3:
        B = B * 0.3 / rho
    X = ext_exp(B)
    np.testing.assert_allclose(ext_log(X), B, atol=1e-7)
    Y = ext_exp(ext_log(ExtMat(1.0, B)))
    np.testing.assert_allclose(Y.body, B, atol=1e-7)


def test_box_trace_zero_gives_unit_det(rng):
    D = np.ones((2, 3))
    for _ in range(20):
        A = rng.normal(size=(2, 3))
        A = A - box_trace(A) / box_trace(D) * D
        assert abs(box_trace(A)) < 1e-12
        assert np.linalg.det(scipy.linalg.expm(box(A))) == pytest.approx(1.0, rel=1e-8)


def test_relative_inverse(rng):
    for shape in [(2, 3), (2, 4), (3, 3)]:
        A = rng.normal(size=shape)
        rel_id, inv = relative_inverse(A)
        np.testing.assert_allclose(dk_stp(A, rel_id), A, atol=1e-9)
        np.testing.assert_allclose(dk_stp(A, inv), rel_id, atol=1e-9)
    with pytest.raises(NotInvertible):
        relative_inverse(rng.normal(size=(3, 2)))


# -- G_M and the hyper GL product -----------------------------------------------------


def skew(rng, k):
    S = rng.normal(size=(k, k))
    return S - S.T


def test_gm_members(rng):
    M = rng.normal(size=(3, 2))
    assert gm_member(np.zeros((2, 2)), M)
    S = skew(rng, 3)
    assert gm_member(S, np.eye(3))
    assert not gm_member(S + np.eye(3), np.eye(3))


def test_gm_closure(rng):
    for _ in range(100):
        n = int(rng.integers(2, 5))
        sizes = [d for d in range(1, n + 1) if n % d == 0]
        A = skew(rng, int(rng.choice(sizes)))
        B = skew(rng, int(rng.choice(sizes)))
        M = np.eye(n)
        assert gm_member(A, M) and gm_member(B, M)
        C = bracket(A, B, "pseudo")
        assert gm_member(C, M, tol=1e-8)
        np.testing.assert_allclose(gm_residual_box(C, M), 0, atol=1e-8)


@given(matrices(), matrices())
def test_gm_two_tests_agree(A, M):
    direct = np.max(np.abs(gm_residual(A, M))) <= 1e-9
    via_box = np.max(np.abs(gm_residual_box(A, M))) <= 1e-9
    assert direct == via_box


def test_hyper_gl_identities(rng):
    I = hyper_gl_mul(ExtMat.identity(2, 3), ExtMat.identity(3, 2))
    assert I.scalar == 1.0 and I.shape == (6, 6) and not I.body.any()
    B0 = rng.normal(size=(3, 2))
    out = hyper_gl_mul(ExtMat.identity(2, 3), ExtMat(1.0, B0))
    np.testing.assert_allclose(out.body, inflate(B0, 6, 6), atol=1e-15)


def test_hyper_gl_group_laws(rng):
    shapes = [(2, 2), (2, 3), (3, 2)]
    for _ in range(50):
        X, Y, Z = (ExtMat(1.0, 0.4 * rng.uniform(-1, 1, size=shapes[rng.integers(3)])) for _ in range(3))
        left = hyper_gl_mul(hyper_gl_mul(X, Y), Z)
        right = hyper_gl_mul(X, hyper_gl_mul(Y, Z))
        np.testing.assert_allclose(left.body, right.body, atol=1e-9)
        XY = hyper_gl_mul(X, Y)
        lhs = ext_invert(XY)
        rhs = hyper_gl_mul(ext_invert(Y), ext_invert(X))
        np.testing.assert_allclose(lhs.body, rhs.body, atol=1e-8)
