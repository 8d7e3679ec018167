import json

import numpy as np
import pytest

from crossdim.cli import load_system, main
from crossdim.io import read_matrix, write_matrix
from crossdim.stp import ltimes


@pytest.fixture
def files(tmp_path):
    rng = np.random.default_rng(7)
    paths = {}
    for name, arr in {
        "A": rng.normal(size=(2, 3)),
        "B": rng.normal(size=(3, 2)),
        "M": rng.normal(size=(2, 3)) * 0.5,
        "x0": rng.normal(size=5),
        "C": rng.normal(size=(2, 2)),
        "e1": np.ones(2),
        "e2": np.ones(4),
        "xi": np.array([1.0, 2.0, 3.0, 4.0]),
        "zero_crit": np.array([[-0.5, 0.0, 0.0], [0.0, 0.0, 0.0]]),  # restricted form diag(-1, 0)
    }.items():
        write_matrix(tmp_path / f"{name}.txt", arr)
        paths[name] = tmp_path / f"{name}.txt"
    return tmp_path, paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_bindings(files, capsys):
    tmp, p = files
    code, out, _ = run(capsys, "eval", "A ltimes B", "-A", p["A"], "-B", p["B"], "--out", tmp / "r.txt")
    assert code == 0
    assert out.startswith("# shape 2x2")
    expected = ltimes(read_matrix(p["A"]), read_matrix(p["B"]))
    np.testing.assert_array_equal(read_matrix(tmp / "r.txt"), expected)
    code, out, _ = run(capsys, "eval", "A ltimes B", "--bind", f"A={p['A']}", "--bind", f"B={p['B']}", "--json")
    assert code == 0
    np.testing.assert_allclose(json.loads(out)["data"], expected, atol=1e-15)


def test_eval_errors(files, capsys):
    _, p = files
    code, _, err = run(capsys, "eval", "A ltimes (B", "-A", p["A"], "-B", p["B"])
    assert code == 2 and "column" in err
    code, _, err = run(capsys, "eval", "A ltimes Q", "-A", p["A"])
    assert code == 2 and "Q" in err
    code, _, _ = run(capsys, "eval", "A", "-A", p["A"] / "missing")
    assert code == 2
    code, _, _ = run(capsys, "eval", "A badd B", "-A", p["A"], "-B", p["B"])
    assert code == 3


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", "nosuch")[0] == 2
    assert run(capsys, "spectrum", "a.txt", "extra")[0] == 2


@pytest.mark.parametrize("suite", ["geometry", "lie", "perm"])
def test_check_suites(capsys, suite):
    code, out, _ = run(capsys, "check", suite, "--trials", 5, "--seed", 1)
    assert code == 0
    assert "FAIL" not in out
    assert out.strip().splitlines()[-1].endswith("laws passed")


def test_check_failure_exit_code(capsys):
    # a negative tolerance can never be met by a nonnegative residual
    code, out, _ = run(capsys, "check", "geometry", "--trials", 2, "--tol", -1)
    assert code == 1
    assert "FAIL" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "perm", "--trials", 3, "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert {law["law"] for law in data["laws"]} >= {"functoriality_order_6"}


def test_simulate_discrete(files, capsys):
    tmp, p = files
    spec = tmp / "sys.txt"
    spec.write_text(
        "structure = aleph2\nM = M.txt\nx0 = x0.txt\nC = C.txt\n"
        "disturbances = e1.txt, e2.txt\nhorizon = 4\noutput = traj.txt\n"
    )
    code, out, _ = run(capsys, "simulate", spec)
    assert code == 0
    assert "dims: 5 2x4" in out
    rows = [ln.split() for ln in (tmp / "traj.txt").read_text().splitlines() if not ln.startswith("#")]
    assert [int(r[1]) for r in rows] == [5, 2, 2, 2, 2]


def test_simulate_continuous(files, capsys):
    tmp, p = files
    write_matrix(tmp / "Msq.txt", np.array([[0.0, 1.0], [-1.0, 0.0]]))
    write_matrix(tmp / "y0.txt", np.array([1.0, 0.0]))
    spec = tmp / "osc.txt"
    spec.write_text("structure = aleph1\nM = Msq.txt\nx0 = y0.txt\nT = 1.0\ndt = 0.001\n")
    code, out, _ = run(capsys, "simulate", spec, "--json")
    assert code == 0
    final = json.loads(out)["final"]
    np.testing.assert_allclose(final, [np.cos(1.0), -np.sin(1.0)], atol=1e-9)


def test_simulate_bad_specs(files, capsys):
    tmp, _ = files
    spec = tmp / "bad.txt"
    spec.write_text("structure = aleph2\nM = M.txt\n")
    assert run(capsys, "simulate", spec)[0] == 2
    spec.write_text("structure = aleph2\nM = M.txt\nx0 = x0.txt\ncolour = red\nhorizon = 1\n")
    assert run(capsys, "simulate", spec)[0] == 2
    spec.write_text("structure = aleph3\nM = C.txt\nx0 = x0.txt\nT = 1\ndt = 0.1\n")
    code, _, err = run(capsys, "simulate", spec)
    assert code == 3 and "DimensionNotInvariant" in err


def test_load_system(files):
    tmp, p = files
    spec = tmp / "sys.txt"
    spec.write_text("# comment\nstructure = aleph2  # trailing\nM = M.txt\nx0 = x0.txt\nhorizon = 3\n")
    sysspec, controls, dists, extras = load_system(spec)
    assert sysspec.horizon == 3 and controls == [] and dists == []
    np.testing.assert_array_equal(sysspec.M, read_matrix(p["M"]))


def test_invert(files, capsys):
    tmp, p = files
    code, out, _ = run(capsys, "invert", p["A"], "--unweighted", "--out", tmp / "inv.txt")
    assert code == 0
    assert "x1:" in out and "x2:" in out and "criterion:" in out
    residual = float(out.strip().splitlines()[-1].split()[-1])
    assert residual < 1e-10
    assert read_matrix(tmp / "inv.txt").shape == (2, 3)
    code, out, _ = run(capsys, "invert", p["A"], "--method", "linear_solve", "--json")
    assert json.loads(out)["residual"] < 1e-10


def test_invert_criterion_zero(files, capsys):
    _, p = files
    code, _, err = run(capsys, "invert", p["zero_crit"], "--unweighted")
    assert code == 3
    assert "criterion" in err


def test_spectrum(files, capsys):
    tmp, _ = files
    write_matrix(tmp / "d.txt", np.diag([2.0, 3.0]))
    code, out, _ = run(capsys, "spectrum", tmp / "d.txt", "--json")
    assert code == 0
    vals = sorted(v[0] for v in json.loads(out)["eigenvalues"])
    np.testing.assert_allclose(vals, [2.0, 3.0])


def test_reduce(files, capsys):
    tmp, _ = files
    write_matrix(tmp / "v.txt", np.kron([1.0, 2.0], np.ones(3)))
    code, out, _ = run(capsys, "reduce", tmp / "v.txt", "--json")
    data = json.loads(out)
    assert code == 0 and data["row_factor"] == 3
    np.testing.assert_allclose(data["representative"]["data"], [1.0, 2.0])
    assert run(capsys, "reduce", tmp / "v.txt", "--weight", "J")[0] == 2


def test_project(files, capsys):
    _, p = files
    code, out, _ = run(capsys, "project", p["xi"], 6, "--json")
    assert code == 0
    np.testing.assert_allclose(json.loads(out)["x0"], [1.0, 1.5, 2.0, 3.0, 3.5, 4.0])
