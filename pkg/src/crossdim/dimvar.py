"""Linear (control) systems over the six matrix-vector module structures.

``aleph1`` is the classical state-space model.  The others let the state,
control and disturbance dimensions differ from the system matrices:

========  =================  ===========================
name      M acting on x      vector addition
========  =================  ===========================
aleph1    classical product  classical
aleph2    DK-STP             hat (E stretching)
aleph3    type-1 MV-STP      bar (all-ones stretching)
aleph4    type-2 MV-STP      bar
aleph5    DK-STP             hat, then E-reduction
aleph6    DK-STP             hat, then E-reduction
========  =================  ===========================

Each product is paired with the stretching it commutes with, so the module
laws hold up to the matching equivalence.  DK-STP outputs all lie in R^m,
so for aleph2 the hat sum is the classical one.  The disturbance always
enters through the DK-STP ``C dk eta``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .equivalence import reduce_vec
from .errors import DimensionNotInvariant, ShapeError
from .stp import dk_stp, mv_stp, sta
from .weights import as_mat, as_vec

STRUCTURES = ("aleph1", "aleph2", "aleph3", "aleph4", "aleph5", "aleph6")


@dataclass
class SystemSpec:
    structure: str
    M: object
    x0: np.ndarray
    B: object = None
    C: object = None
    horizon: int | None = None
    T: float | None = None
    dt: float | None = None
    weighted: bool = True

    def __post_init__(self):
        if self.structure not in STRUCTURES:
            raise ValueError(f"structure must be one of {STRUCTURES}, got {self.structure!r}")
        self.x0 = as_vec(self.x0)


@dataclass
class Trajectory:
    times: list = field(default_factory=list)
    states: list = field(default_factory=list)
    dims: list = field(default_factory=list)

    def append(self, t: float, x: np.ndarray) -> None:
        self.times.append(t)
        self.states.append(x)
        self.dims.append(int(x.size))

    def to_text(self) -> str:
        rows = []
        for t, d, x in zip(self.times, self.dims, self.states):
            rows.append(" ".join([f"{t:.17g}", str(d)] + [f"{v:.17g}" for v in x]))
        return "\n".join(rows) + "\n"

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("# time dim entries...\n")
            fh.write(self.to_text())

    @classmethod
    def load(cls, path) -> "Trajectory":
        traj = cls()
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split()
                traj.append(float(parts[0]), np.array([float(v) for v in parts[2:]]))
        return traj


def apply(structure: str, M, x, weighted: bool = True) -> np.ndarray:
    """The module action ``M . x`` of the given structure."""
    M, x = as_mat(M), as_vec(x)
    if structure == "aleph1":
        if M.shape[1] != x.size:
            raise ShapeError(f"aleph1 needs matching dimensions, got M {M.shape} and x of dim {x.size}")
        return M @ x
    if structure in ("aleph2", "aleph5", "aleph6"):
        return dk_stp(M, x, weighted)
    if structure == "aleph3":
        return mv_stp(M, x, "type1")
    if structure == "aleph4":
        return mv_stp(M, x, "type2")
    raise ValueError(f"unknown structure {structure!r}")


def add(structure: str, x, y) -> np.ndarray:
    """Vector addition of the given structure."""
    x, y = as_vec(x), as_vec(y)
    if structure == "aleph1":
        if x.size != y.size:
            raise ShapeError(f"aleph1 addition needs equal dimensions, got {x.size} and {y.size}")
        return x + y
    if structure in ("aleph3", "aleph4"):
        return sta(x, y, "vec_bar")
    return sta(x, y, "vec_hat")


def _square_check(structure: str, M) -> None:
    M = as_mat(M)
    if structure in ("aleph1", "aleph3", "aleph4") and M.shape[0] != M.shape[1]:
        raise ShapeError(f"{structure} needs a square system matrix, got {M.shape}")


def _at(seq, k: int):
    # Step-indexed sequences repeat periodically; a bare array is time invariant.
    if seq is None:
        return None
    if isinstance(seq, np.ndarray) or callable(seq):
        return seq
    seq = list(seq)
    if not seq:
        return None
    return seq[k % len(seq)]


def simulate_discrete(spec: SystemSpec, u: Sequence | None = None, eta: Sequence | None = None) -> Trajectory:
    """Iterate ``x(t+1) = M.x(t) [+ B.u(t)] [+ C dk eta(t)]`` for ``spec.horizon`` steps."""
    if spec.horizon is None or spec.horizon < 0:
        raise ValueError("discrete simulation needs a nonnegative horizon")
    s = spec.structure
    traj = Trajectory()
    x = spec.x0.copy()
    traj.append(0, x)
    for k in range(spec.horizon):
        M = _at(spec.M, k)
        _square_check(s, M)
        try:
            nxt = apply(s, M, x, spec.weighted)
            uk, Bk = _at(u, k), _at(spec.B, k)
            if uk is not None and Bk is not None:
                nxt = add(s, nxt, apply(s, Bk, uk, spec.weighted))
            ek, Ck = _at(eta, k), _at(spec.C, k)
            if ek is not None and Ck is not None:
                nxt = add(s, nxt, dk_stp(Ck, as_vec(ek), spec.weighted))
        except ShapeError as exc:
            raise ShapeError(f"step {k}: {exc}") from exc
        if s in ("aleph5", "aleph6"):
            nxt = reduce_vec(nxt, weight="E").representative
        x = nxt
        traj.append(k + 1, x)
    return traj


def _call(f, t: float):
    if f is None:
        return None
    return f(t) if callable(f) else f


def simulate_continuous(
    spec: SystemSpec,
    u: Callable[[float], np.ndarray] | None = None,
    eta: Callable[[float], np.ndarray] | None = None,
) -> Trajectory:
    """Fixed-step RK4 for ``x' = M.x + B.u(t) + C dk eta(t)``.

    ``M``, ``B`` and ``C`` may be arrays or callables of time.  The state
    dimension must stay fixed; this is checked at ``t = 0``.
    """
    if spec.T is None or spec.dt is None or spec.dt <= 0 or spec.T < 0:
        raise ValueError("continuous simulation needs T >= 0 and dt > 0")
    s, w = spec.structure, spec.weighted
    n = spec.x0.size

    def rhs(t: float, x: np.ndarray) -> np.ndarray:
        terms = [apply(s, _call(spec.M, t), x, w)]
        ut, Bt = _call(u, t), _call(spec.B, t)
        if ut is not None and Bt is not None:
            terms.append(apply(s, Bt, ut, w))
        et, Ct = _call(eta, t), _call(spec.C, t)
        if et is not None and Ct is not None:
            terms.append(dk_stp(Ct, as_vec(et), w))
        for name, term in zip(("M.x", "B.u", "C dk eta"), terms):
            if term.size != n:
                raise DimensionNotInvariant(f"t = {t:.6g}: {name} has dimension {term.size}, state has {n}")
        return sum(terms)

    rhs(0.0, spec.x0)
    steps = int(round(spec.T / spec.dt))
    traj = Trajectory()
    x = spec.x0.copy()
    traj.append(0.0, x)
    h = spec.dt
    for k in range(steps):
        t = k * h
        try:
            with np.errstate(over="raise", invalid="raise"):
                k1 = rhs(t, x)
                k2 = rhs(t + h / 2, x + h / 2 * k1)
                k3 = rhs(t + h / 2, x + h / 2 * k2)
                k4 = rhs(t + h, x + h * k3)
                x = x + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        except (FloatingPointError, ValueError) as exc:
            if isinstance(exc, ValueError) and "finite" not in str(exc):
                raise
            raise FloatingPointError(f"non-finite state at step {k + 1} (t = {t + h:.6g})") from None
        if not np.all(np.isfinite(x)):
            raise FloatingPointError(f"non-finite state at step {k + 1} (t = {t + h:.6g})")
        traj.append((k + 1) * h, x)
    return traj
