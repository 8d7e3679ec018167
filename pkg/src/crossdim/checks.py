"""Seeded law suites used by ``crossdim check`` and the acceptance tests.

Each law is a function of a random generator returning a nonnegative
residual; a suite runs every law ``trials`` times and keeps the maximum.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import geometry, lie, stp
from .equivalence import equivalent, reduce_mat, reduce_vec
from .hypergroup import box, s_char_poly
from .lattice import lcm
from .perm import Perm, embed, perm_matrix, perm_product, perm_sign
from .weights import e_col, e_mat, j_mat

PI_4_6 = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.5, 0.5, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.5, 0.5],
        [0.0, 0.0, 0.0, 1.0],
    ]
)


@dataclass(frozen=True)
class Law:
    name: str
    fn: Callable[[np.random.Generator], float]
    tol: float | None = None  # None: use the suite tolerance; 0.0: exact
    repeat: bool = True  # False for deterministic laws


@dataclass(frozen=True)
class LawResult:
    suite: str
    law: str
    max_residual: float
    tol: float
    trials: int

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.tol)


def _err(a, b) -> float:
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if a.shape != b.shape:
        return float("inf")
    return float(np.max(np.abs(a - b))) if a.size else 0.0


def _mat(rng, max_dim: int = 4, shape=None) -> np.ndarray:
    if shape is None:
        shape = tuple(rng.integers(1, max_dim + 1, size=2))
    return rng.uniform(-1, 1, size=shape)


# -- STP laws ---------------------------------------------------------------


def _assoc(op):
    return lambda rng: _err(op(op(A := _mat(rng), B := _mat(rng)), C := _mat(rng)), op(A, op(B, C)))


def _dk_assoc(rng):
    A, B, C = _mat(rng), _mat(rng), _mat(rng)
    return _err(stp.dk_stp(stp.dk_stp(A, B), C), stp.dk_stp(A, stp.dk_stp(B, C)))


def _dk_same_shape_ring(rng):
    shape = tuple(rng.integers(1, 5, size=2))
    A, B, C = (_mat(rng, shape=shape) for _ in range(3))
    return max(
        _err(stp.dk_stp(A + B, C), stp.dk_stp(A, C) + stp.dk_stp(B, C)),
        _err(stp.dk_stp(C, A + B), stp.dk_stp(C, A) + stp.dk_stp(C, B)),
    )


def _pstp_distrib(rng):
    A, B, C = _mat(rng), _mat(rng), _mat(rng)
    left = _err(stp.pseudo_stp(stp.hadd(A, B), C), stp.hadd(stp.pseudo_stp(A, C), stp.pseudo_stp(B, C)))
    right = _err(stp.pseudo_stp(C, stp.hadd(A, B)), stp.hadd(stp.pseudo_stp(C, A), stp.pseudo_stp(C, B)))
    return max(left, right)


def _transpose_laws(rng):
    A, B = _mat(rng), _mat(rng)
    return max(
        _err(stp.ltimes(A, B).T, stp.ltimes(B.T, A.T)),
        _err(stp.dk_stp(A, B).T, stp.dk_stp(B.T, A.T)),
        _err(stp.pseudo_stp(A, B).T, stp.pseudo_stp(B.T, A.T)),
        _err(stp.hadd(A, B).T, stp.hadd(A.T, B.T)),
    )


def _weight_identities(rng):
    m, n, p, q = (int(v) for v in rng.integers(1, 5, size=4))
    en, em = e_col(n), e_col(m)
    return max(
        abs((en.T @ en).item() - 1.0),
        _err(np.kron(en, em), e_col(m * n)),
        _err(np.kron(em, en), e_col(m * n)),
        _err(np.kron(e_mat(m, n), e_mat(p, q)), e_mat(m * p, n * q)),
        _err(np.kron(e_mat(p, q), e_mat(m, n)), e_mat(m * p, n * q)),
        _err(e_mat(m, n).T, e_mat(n, m)),
        _err(j_mat(n), e_mat(n, n)),
    )


def _e_cancellation(rng):
    m, n, p, q, r, s, k = (int(v) for v in rng.integers(1, 4, size=7))
    A, B = _mat(rng, shape=(m, n)), _mat(rng, shape=(p, q))
    ref = np.kron(A, e_mat(r, p)) @ np.kron(B, e_mat(n, s))
    first = np.kron(A, e_mat(r, k * p)) @ np.kron(B, e_mat(k * n, s))
    second = np.kron(A, e_mat(k * r, p)) @ np.kron(B, e_mat(n, k * s))
    # the second identity holds up to the E-equivalence: the left side is ref (x) E_{k x k}
    return max(_err(first, ref), _err(second, np.kron(ref, e_mat(k, k))))


def _degeneracy(rng):
    m, n, q = (int(v) for v in rng.integers(1, 5, size=3))
    A, B = _mat(rng, shape=(m, n)), _mat(rng, shape=(n, q))
    return max(
        _err(stp.ltimes(A, B), A @ B),
        _err(stp.rtimes(A, B), A @ B),
        _err(stp.circ(A, B), A @ B),
        _err(stp.dk_stp(A, B), A @ B),
    )


# -- hyper ring -------------------------------------------------------------


def _hadd_group(rng):
    A, B, C = _mat(rng), _mat(rng), _mat(rng)
    return max(
        _err(stp.hadd(stp.hadd(A, B), C), stp.hadd(A, stp.hadd(B, C))),
        _err(stp.hadd(A, B), stp.hadd(B, A)),
        _err(stp.hadd(A, np.zeros((1, 1))), A),
    )


def _inflate(rng, A):
    a, b = (int(v) for v in rng.integers(1, 4, size=2))
    return stp.inflate(A, A.shape[0] * a, A.shape[1] * b)


def _operator_consistency(rng):
    A, B = _mat(rng, 3), _mat(rng, 3)
    A2, B2 = _inflate(rng, A), _inflate(rng, B)
    ok_sum = equivalent(stp.hadd(A, B), stp.hadd(A2, B2), "mat_E")
    ok_prod = equivalent(stp.pseudo_stp(A, B), stp.pseudo_stp(A2, B2), "mat_E")
    return 0.0 if ok_sum and ok_prod else 1.0


def _box_dk(rng):
    shape = tuple(rng.integers(1, 5, size=2))
    A, B = _mat(rng, shape=shape), _mat(rng, shape=shape)
    return _err(box(stp.dk_stp(A, B)), box(A) @ box(B))


def _box_pstp(rng):
    A, B = _mat(rng), _mat(rng)
    return _err(box(stp.pseudo_stp(A, B)), stp.circ(box(A), box(B)))


# -- permutations -----------------------------------------------------------


def _all_perms(orders=(1, 2, 3, 4)):
    for n in orders:
        for img in itertools.permutations(range(n)):
            yield Perm(img)


def _random_perm(rng, n: int) -> Perm:
    return Perm(tuple(int(v) for v in rng.permutation(n)))


def _perm_pair_residual(s: Perm, m: Perm) -> float:
    Ms, Mm = perm_matrix(s), perm_matrix(m)
    out = 0.0
    for side, op in (("left", stp.ltimes), ("right", stp.rtimes)):
        prod = perm_product(s, m, side)
        if not np.array_equal(perm_matrix(prod), op(Ms, Mm)):
            out = max(out, float(np.max(np.abs(perm_matrix(prod) - op(Ms, Mm)))))
    sign_l = perm_sign(perm_product(s, m, "left"))
    sign_r = perm_sign(perm_product(s, m, "right"))
    t = lcm(s.order, m.order)
    for side, sign in (("left", sign_l), ("right", sign_r)):
        if sign != perm_sign(embed(s, t, side)) * perm_sign(embed(m, t, side)):
            out = max(out, 1.0)
        if sign != round(np.linalg.det(perm_matrix(perm_product(s, m, side)))):
            out = max(out, 1.0)
    return out


def _perm_exhaustive(rng):
    perms = list(_all_perms())
    return max(_perm_pair_residual(s, m) for s in perms for m in perms)


def _perm_order6(rng):
    return _perm_pair_residual(_random_perm(rng, 6), _random_perm(rng, 6))


def _perm_group(rng):
    n = int(rng.integers(1, 7))
    s, m, r = (_random_perm(rng, n) for _ in range(3))
    assoc = (s.compose(m)).compose(r) == s.compose(m.compose(r))
    inv = s.compose(s.inverse()) == Perm.identity(n)
    return 0.0 if assoc and inv else 1.0


# -- geometry ---------------------------------------------------------------


def _pi_4_6(rng):
    return 0.0 if np.array_equal(geometry.projection_matrix(4, 6), PI_4_6) else 1.0


def _pythagoras(rng):
    m, n = (int(v) for v in rng.integers(1, 9, size=2))
    xi = rng.normal(size=m)
    x0, res = geometry.project(xi, n)
    return abs(geometry.norm(xi) ** 2 - geometry.norm(x0) ** 2 - geometry.norm(res) ** 2)


def _orthogonality(rng):
    m, n = (int(v) for v in rng.integers(1, 9, size=2))
    xi, z = rng.normal(size=m), rng.normal(size=n)
    x0, _ = geometry.project(xi, n)
    return max(
        abs(geometry.inner(stp.bsub(xi, x0), z - x0)),
        abs(
            geometry.norm_dist(xi, z) ** 2
            - geometry.norm_dist(xi, x0) ** 2
            - geometry.norm_dist(z, x0) ** 2
        ),
    )


def _projection_chain(rng):
    u = int(rng.integers(1, 4))
    v = u * int(rng.integers(1, 4))
    w = v * int(rng.integers(1, 4))
    P = geometry.projection_matrix
    return _err(P(v, u) @ P(w, v), P(w, u))


def _zero_distance(rng):
    s = int(rng.integers(1, 4))
    z = rng.normal(size=s)
    a, b = (int(v) for v in rng.integers(1, 4, size=2))
    x, y = np.kron(z, np.ones(a)), np.kron(z, np.ones(b))
    d = geometry.norm_dist(x, y)
    return d if equivalent(x, y, "vec_J") else 1.0


def _inner_invariance(rng):
    m, n, k = (int(v) for v in rng.integers(1, 5, size=3))
    x, y = rng.normal(size=m), rng.normal(size=n)
    return max(
        abs(geometry.inner(np.kron(x, np.ones(k)), y) - geometry.inner(x, y)),
        abs(geometry.inner(np.kron(x, e_col(k).ravel()), y, "hat") - geometry.inner(x, y, "hat")),
    )


# -- Lie structures ---------------------------------------------------------

LIE_SHAPES = ((1, 2), (2, 2), (2, 3), (3, 2), (2, 4), (3, 4), (4, 6), (3, 6), (4, 4))


def _jacobi(rng):
    shape = tuple(rng.integers(1, 5, size=2))
    A, B, C = (_mat(rng, shape=shape) for _ in range(3))
    br = lie.bracket
    return _err(br(A, br(B, C)) + br(B, br(C, A)) + br(C, br(A, B)), np.zeros(shape))


def _cayley_hamilton(shape, weighted):
    def law(rng):
        A = _mat(rng, shape=shape)
        scale = 1.0 + np.linalg.norm(lie.restricted_form(A, weighted), 2) ** shape[0] * np.max(np.abs(A))
        return float(np.max(np.abs(lie.cayley_hamilton_residual(A, weighted)))) / scale

    return law


def _s_cayley_hamilton(rng):
    A = _mat(rng)
    S = box(A)
    p = s_char_poly(A)
    scale = 1.0 + np.linalg.norm(S, 2) ** p.degree
    return float(np.max(np.abs(p.eval_matrix(S)))) / scale


def _inverse(rng):
    shape = tuple(rng.integers(1, 5, size=2))
    A0 = _mat(rng, shape=shape)
    _, crit, _ = lie.inverse_coefficients(A0)
    if abs(crit) < 1e-3:
        return 0.0
    X = lie.ExtMat(1.0, A0)
    Y1 = lie.ext_invert(X, "closed_form")
    Y2 = lie.ext_invert(X, "linear_solve")
    return max(lie.invert_residual(X, Y1), _err(Y1.body, Y2.body))


def _exp_log(rng):
    B = _mat(rng, shape=(2, 3))
    rho = np.linalg.norm(lie.restricted_form(B), 2)
    if rho > 0.3:
        B = B * (0.3 / rho)
    X = lie.ext_exp(B)
    return _err(lie.ext_log(X), B)


def _gm_closure(rng):
    n = int(rng.integers(2, 5))
    sizes = [d for d in range(1, n + 1) if n % d == 0]
    out = 0.0
    M = np.eye(n)
    for _ in range(2):
        a, b = (int(rng.choice(sizes)) for _ in range(2))
        S = rng.normal(size=(a, a))
        T = rng.normal(size=(b, b))
        A, B = S - S.T, T - T.T
        C = lie.bracket(A, B, "pseudo")
        out = max(out, float(np.max(np.abs(lie.gm_residual(C, M)))))
        out = max(out, _err(lie.gm_residual_box(C, M), np.zeros_like(box(stp.pseudo_stp(C, M)))))
    return out


def _hyper_gl_assoc(rng):
    shapes = [(2, 2), (2, 3), (3, 2)]
    X, Y, Z = (lie.ExtMat(1.0, _mat(rng, shape=shapes[int(rng.integers(3))])) for _ in range(3))
    left = lie.hyper_gl_mul(lie.hyper_gl_mul(X, Y), Z)
    right = lie.hyper_gl_mul(X, lie.hyper_gl_mul(Y, Z))
    return max(abs(left.scalar - right.scalar), _err(left.body, right.body))


def _inflation_hom(rng):
    m, n, a, b = (int(v) for v in rng.integers(1, 4, size=4))
    A, B = _mat(rng, shape=(m, n)), _mat(rng, shape=(m, n))
    pi = lambda X: np.kron(X, e_mat(a, b))
    return _err(lie.bracket(pi(A), pi(B)), pi(lie.bracket(A, B)))


def _bracket_trace(rng):
    shape = tuple(rng.integers(1, 5, size=2))
    A, B = _mat(rng, shape=shape), _mat(rng, shape=shape)
    return abs(float(np.trace(lie.restricted_form(lie.bracket(A, B)))))


# -- equivalence ------------------------------------------------------------


def _reduce_round_trip(rng):
    z = rng.normal(size=int(rng.integers(1, 5)))
    k = int(rng.integers(1, 5))
    Z = _mat(rng)
    a, b = (int(v) for v in rng.integers(1, 4, size=2))
    rv = reduce_vec(np.kron(z, np.ones(k)))
    rm = reduce_mat(np.kron(Z, e_mat(a, b)), "E")
    return max(
        _err(np.kron(rv.representative, np.ones(rv.row_factor)), np.kron(z, np.ones(k))),
        _err(stp.inflate(rm.representative, Z.shape[0] * a, Z.shape[1] * b), np.kron(Z, e_mat(a, b))),
    )


SUITES: dict[str, list[Law]] = {
    "stp_laws": [
        Law("assoc_ltimes", _assoc(stp.ltimes)),
        Law("assoc_rtimes", _assoc(stp.rtimes)),
        Law("assoc_circ", _assoc(stp.circ)),
        Law("assoc_dk", _dk_assoc),
        Law("assoc_pstp", _assoc(stp.pseudo_stp)),
        Law("dk_ring_distributivity", _dk_same_shape_ring),
        Law("transpose_laws", _transpose_laws),
        Law("e_weight_identities", _weight_identities),
        Law("e_weight_cancellation", _e_cancellation),
        Law("classical_degeneracy", _degeneracy),
    ],
    "hyper_ring": [
        Law("hadd_abelian_hyper_group", _hadd_group),
        Law("pstp_distributivity", _pstp_distrib),
        Law("equivalence_consistency", _operator_consistency, tol=0.0),
        Law("box_dk_homomorphism", _box_dk),
        Law("box_pstp_homomorphism", _box_pstp),
        Law("reduce_inflate_round_trip", _reduce_round_trip, tol=1e-12),
    ],
    "perm": [
        Law("functoriality_orders_1_to_4", _perm_exhaustive, tol=0.0, repeat=False),
        Law("functoriality_order_6", _perm_order6, tol=0.0),
        Law("group_axioms", _perm_group, tol=0.0),
    ],
    "geometry": [
        Law("projection_4_6_exact", _pi_4_6, tol=0.0, repeat=False),
        Law("pythagoras", _pythagoras),
        Law("orthogonality", _orthogonality),
        Law("projection_chain", _projection_chain),
        Law("zero_distance_iff_equivalent", _zero_distance),
        Law("inner_product_invariance", _inner_invariance),
    ],
    "lie": [
        Law("jacobi_dk", _jacobi),
        Law("bracket_trace_zero", _bracket_trace),
        *(
            Law(f"cayley_hamilton_{m}x{n}_{'E' if w else 'ones'}", _cayley_hamilton((m, n), w), tol=1e-7)
            for (m, n) in LIE_SHAPES
            for w in (True, False)
        ),
        Law("s_cayley_hamilton", _s_cayley_hamilton, tol=1e-7),
        Law("inverse_both_methods", _inverse, tol=1e-8),
        Law("exp_log_round_trip", _exp_log, tol=1e-7),
        Law("gm_bracket_closure", _gm_closure, tol=1e-8),
        Law("hyper_gl_associativity", _hyper_gl_assoc),
        Law("inflation_homomorphism", _inflation_hom),
    ],
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(suite: str, seed: int = 0, trials: int = 100, tol: float = 1e-9) -> list[LawResult]:
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {SUITE_NAMES}")
    results = []
    for name in names:
        for i, law in enumerate(SUITES[name]):
            rng = np.random.default_rng([seed, len(name), i])
            n = trials if law.repeat else 1
            worst = max(law.fn(rng) for _ in range(n))
            results.append(LawResult(name, law.name, worst, tol if law.tol is None else law.tol, n))
    return results
