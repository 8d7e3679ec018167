"""Command-line front end.

Exit codes: 0 success, 1 check failure, 2 usage or parse error, 3 numeric
or shape error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import checks, dimvar, geometry, lie
from .equivalence import reduce_mat, reduce_vec
from .errors import CrossDimError, NotInvertible
from .expr import ExprError, evaluate
from .hypergroup import s_char_poly, s_spectrum
from .io import MatrixFileError, format_matrix, read_matrix, write_matrix

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    s = argparse.SUPPRESS
    p.add_argument("--tol", type=float, default=s, help="tolerance (default 1e-9)")
    p.add_argument("--weighted", dest="weighted", action="store_true", default=s,
                   help="E-weighted bridge matrix (default)")
    p.add_argument("--unweighted", dest="weighted", action="store_false", default=s,
                   help="all-ones bridge matrix")
    p.add_argument("--seed", type=int, default=s, help="random seed (default 0)")
    p.add_argument("--json", action="store_true", default=s, help="machine-readable output")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="crossdim", parents=[common],
                                     description="Cross-dimensional matrix algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an operator expression")
    p.add_argument("expr")
    p.add_argument("--bind", action="append", default=[], metavar="NAME=PATH")
    p.add_argument("--out", help="also write the result as a matrix file")

    p = sub.add_parser("check", parents=[common], help="run a law suite")
    p.add_argument("suite", choices=checks.SUITE_NAMES)
    p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("simulate", parents=[common], help="simulate a linear system from a spec file")
    p.add_argument("spec")
    p.add_argument("--out", help="trajectory output path (overrides the output key)")

    p = sub.add_parser("spectrum", parents=[common], help="s-eigenvalues of a matrix")
    p.add_argument("file")

    p = sub.add_parser("invert", parents=[common], help="invert a I + A0 in GL(m x n)")
    p.add_argument("file")
    p.add_argument("--scalar", type=float, default=1.0)
    p.add_argument("--method", choices=("closed_form", "linear_solve"), default="closed_form")
    p.add_argument("--out")

    p = sub.add_parser("reduce", parents=[common], help="irreducible representative")
    p.add_argument("file")
    p.add_argument("--weight", choices=("ones", "E", "I", "J"), default=None,
                   help="vectors: ones|E (default ones); matrices: E|I|J (default E)")

    p = sub.add_parser("project", parents=[common], help="project a vector onto R^n")
    p.add_argument("file")
    p.add_argument("n", type=int)
    return parser


def _fill_defaults(args: argparse.Namespace) -> None:
    for key, value in (("tol", 1e-9), ("weighted", True), ("seed", 0), ("json", False)):
        if not hasattr(args, key):
            setattr(args, key, value)


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text.rstrip("\n"))


def _mat_payload(a) -> dict:
    a = np.asarray(a, dtype=float)
    return {"shape": list(a.shape), "data": a.tolist()}


def _bindings(args, extra: list[str]) -> dict[str, np.ndarray]:
    pairs = []
    for item in args.bind:
        if "=" not in item:
            raise UsageError(f"--bind expects NAME=PATH, got {item!r}")
        pairs.append(tuple(item.split("=", 1)))
    it = iter(extra)
    for tok in it:
        if not tok.startswith("-") or tok.startswith("--"):
            raise UsageError(f"unexpected argument {tok!r}")
        path = next(it, None)
        if path is None:
            raise UsageError(f"binding {tok} is missing a file path")
        pairs.append((tok[1:], path))
    return {name: read_matrix(path) for name, path in pairs}


def cmd_eval(args, extra) -> int:
    result = evaluate(args.expr, _bindings(args, extra), args.weighted)
    if args.out:
        write_matrix(args.out, result, comment=args.expr)
    shape = "x".join(map(str, np.shape(result)))
    _emit(args, f"# shape {shape}\n" + format_matrix(result), _mat_payload(result))
    return EXIT_OK


def cmd_check(args) -> int:
    results = checks.run_suite(args.suite, seed=args.seed, trials=args.trials, tol=args.tol)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.suite:<10} {r.law:<34} max_residual={r.max_residual:.3e}  tol={r.tol:.0e}"
        for r in results
    ]
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} laws passed")
    payload = {
        "passed": ok,
        "laws": [dict(suite=r.suite, law=r.law, max_residual=r.max_residual, tol=r.tol,
                      trials=r.trials, passed=r.passed) for r in results],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if ok else EXIT_CHECK


def _read_spec(path: Path) -> dict[str, str]:
    cfg = {}
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        cfg[key] = value
    return cfg


def _periodic(seq: list[np.ndarray], period: float):
    return lambda t: seq[int(np.floor(t / period + 1e-9)) % len(seq)]


def load_system(path) -> tuple[dimvar.SystemSpec, list, list, dict]:
    """Parse a simulation spec file; matrix paths are relative to it."""
    path = Path(path)
    try:
        cfg = _read_spec(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    base = path.parent
    known = {"structure", "M", "B", "C", "x0", "horizon", "T", "dt", "controls", "disturbances",
             "control_period", "disturbance_period", "output", "weighted"}
    unknown = set(cfg) - known
    if unknown:
        raise UsageError(f"{path}: unknown keys {sorted(unknown)}")
    for key in ("structure", "M", "x0"):
        if key not in cfg:
            raise UsageError(f"{path}: missing key {key!r}")

    def mat(key):
        return read_matrix(base / cfg[key]) if key in cfg else None

    def files(key):
        return [read_matrix(base / f.strip()) for f in cfg.get(key, "").split(",") if f.strip()]

    try:
        spec = dimvar.SystemSpec(
            structure=cfg["structure"],
            M=mat("M"),
            x0=mat("x0"),
            B=mat("B"),
            C=mat("C"),
            horizon=int(cfg["horizon"]) if "horizon" in cfg else None,
            T=float(cfg["T"]) if "T" in cfg else None,
            dt=float(cfg["dt"]) if "dt" in cfg else None,
            weighted=cfg.get("weighted", "true").lower() in ("1", "true", "yes"),
        )
    except ValueError as exc:
        if isinstance(exc, (MatrixFileError, CrossDimError)):
            raise
        raise UsageError(f"{path}: {exc}") from None
    if spec.horizon is None and (spec.T is None or spec.dt is None):
        raise UsageError(f"{path}: give either horizon or both T and dt")
    out = cfg.get("output")
    extras = {
        "output": str(base / out) if out else None,
        "control_period": float(cfg.get("control_period", 1.0)),
        "disturbance_period": float(cfg.get("disturbance_period", 1.0)),
    }
    return spec, files("controls"), files("disturbances"), extras


def _dims_summary(dims: list[int]) -> str:
    runs = []
    for d in dims:
        if runs and runs[-1][0] == d:
            runs[-1][1] += 1
        else:
            runs.append([d, 1])
    return " ".join(f"{d}" if c == 1 else f"{d}x{c}" for d, c in runs)


def cmd_simulate(args) -> int:
    spec, controls, dists, extras = load_system(args.spec)
    if spec.horizon is not None:
        traj = dimvar.simulate_discrete(spec, controls or None, dists or None)
    else:
        u = _periodic(controls, extras["control_period"]) if controls else None
        eta = _periodic(dists, extras["disturbance_period"]) if dists else None
        traj = dimvar.simulate_continuous(spec, u, eta)
    out = args.out or extras["output"]
    if out:
        traj.save(out)
    text = f"steps: {len(traj.times) - 1}\ndims: {_dims_summary(traj.dims)}\nfinal: " + " ".join(
        f"{v:.10g}" for v in traj.states[-1]
    )
    if out:
        text += f"\nwritten: {out}"
    payload = {"steps": len(traj.times) - 1, "dims": traj.dims, "final": traj.states[-1].tolist(),
               "output": out}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    A = read_matrix(args.file)
    pairs = s_spectrum(A)
    poly = s_char_poly(A)
    vals = [lam for lam, _ in pairs]
    text = "s-characteristic polynomial (ascending): " + " ".join(f"{c:.10g}" for c in poly.coeffs)
    text += "\ns-eigenvalues:\n" + "\n".join(
        f"{v.real:.12g}" if abs(v.imag) <= args.tol else f"{v.real:.12g} {v.imag:+.12g}i" for v in vals
    )
    payload = {"char_poly": list(poly.coeffs), "eigenvalues": [[v.real, v.imag] for v in vals]}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_invert(args) -> int:
    A0 = read_matrix(args.file)
    X = lie.ExtMat(args.scalar, A0)
    x, criterion, poly = lie.inverse_coefficients(A0 / args.scalar if args.scalar else A0, args.weighted)
    Y = lie.ext_invert(X, args.method, args.weighted)
    residual = lie.invert_residual(X, Y, args.weighted)
    if args.out:
        write_matrix(args.out, Y.body, comment=f"inverse body, scalar {Y.scalar!r}")
    lines = [f"criterion: {criterion:.17g}"]
    lines += [f"x{i}: {v:.17g}" for i, v in enumerate(x, 1)]
    lines += [f"scalar: {Y.scalar:.17g}", "body:", format_matrix(Y.body).rstrip("\n"),
              f"residual: {residual:.3e}"]
    payload = {"criterion": criterion, "x": list(map(float, x)), "scalar": Y.scalar,
               "body": _mat_payload(Y.body), "residual": residual, "char_poly": list(poly.coeffs)}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_reduce(args) -> int:
    a = read_matrix(args.file)
    if a.ndim == 1:
        weight = args.weight or "ones"
        if weight not in ("ones", "E"):
            raise UsageError("vectors reduce with --weight ones or E")
        red = reduce_vec(a, args.tol, weight)
    else:
        weight = args.weight or "E"
        if weight == "ones":
            raise UsageError("matrices reduce with --weight E, I or J")
        red = reduce_mat(a, weight, args.tol)
    text = f"# factors {red.row_factor} {red.col_factor}\n" + format_matrix(red.representative)
    payload = {"row_factor": red.row_factor, "col_factor": red.col_factor,
               "representative": _mat_payload(red.representative)}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_project(args) -> int:
    xi = read_matrix(args.file)
    if xi.ndim == 2 and 1 not in xi.shape:
        raise UsageError("project needs a vector file")
    x0, residual = geometry.project(xi.ravel(), args.n)
    text = "x0:\n" + format_matrix(x0) + "residual:\n" + format_matrix(residual)
    text += f"norms: xi={geometry.norm(xi.ravel()):.12g} x0={geometry.norm(x0):.12g} residual={geometry.norm(residual):.12g}"
    payload = {"x0": x0.tolist(), "residual": residual.tolist()}
    _emit(args, text, payload)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _fill_defaults(args)
    try:
        if args.command == "eval":
            return cmd_eval(args, extra)
        if extra:
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        return {
            "check": cmd_check,
            "simulate": cmd_simulate,
            "spectrum": cmd_spectrum,
            "invert": cmd_invert,
            "reduce": cmd_reduce,
            "project": cmd_project,
        }[args.command](args)
    except (UsageError, ExprError, MatrixFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotInvertible as exc:
        crit = "n/a" if exc.criterion is None else f"{exc.criterion:.6g}"
        print(f"error: not invertible: {exc} (criterion = {crit})", file=sys.stderr)
        return EXIT_NUMERIC
    except (CrossDimError, FloatingPointError, np.linalg.LinAlgError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
