import csv
import subprocess
import sys

import numpy as np
import pytest

from helpers import drape_toml
from ipcsim import cli
from ipcsim.scene import read_obj
from ipcsim.solver import SolverError


@pytest.fixture(scope="module")
def drape(tmp_path_factory):
    path = tmp_path_factory.mktemp("scene") / "drape.toml"
    path.write_text(drape_toml(tol=1e-5, pcg=1e-8))
    return path


def _stats(path):
    lines = path.read_text().splitlines()
    assert lines[0] == cli.STATS_SCHEMA
    return list(csv.DictReader(lines[1:]))


@pytest.fixture(scope="module")
def drape_runs(drape, tmp_path_factory):
    out = {}
    for name in ("cemas16", "blockJacobi"):
        d = tmp_path_factory.mktemp(name)
        assert cli.main(["run", "--scene", str(drape), "--frames", "50", "--precond", name, "--out", str(d)]) == 0
        out[name] = d
    return out


def test_run_writes_frames_stats_and_summary(drape_runs, drape):
    d = drape_runs["cemas16"]
    for obj in ("cloth", "block"):
        frames = sorted((d / obj).glob("frame_*.obj"))
        assert len(frames) == 50 and frames[-1].name == "frame_00050.obj"
    rows = _stats(d / "stats.csv")
    assert [int(r["step"]) for r in rows] == list(range(1, 51))
    assert list(rows[0]) == cli.STATS_COLUMNS
    assert all(float(r["minDistance"]) > 0 for r in rows)
    summary = (d / "summary.txt").read_text()
    for key in ("newton total", "newton avg/step", "cg total", "cg avg/solve", "assembly=", "pcg=", "ccd="):
        assert key in summary


def test_preconditioners_agree_on_final_drape(drape_runs):
    from ipcsim import presets

    a, b = (read_obj(drape_runs[n] / "cloth" / "frame_00050.obj")[0] for n in ("cemas16", "blockJacobi"))
    lo, hi = np.minimum(a.min(0), b.min(0)), np.maximum(a.max(0), b.max(0))
    diag = np.linalg.norm(hi - lo)
    assert np.abs(a - b).max() <= 1e-4 * diag
    ca, cb = (sum(int(r["cgIters"]) for r in _stats(drape_runs[n] / "stats.csv")) for n in drape_runs)
    assert ca != cb


def test_deterministic_stats_are_bitwise_identical(drape, tmp_path):
    outs = []
    for k in range(2):
        d = tmp_path / f"r{k}"
        assert cli.main(["run", "--scene", str(drape), "--frames", "5", "--deterministic", "--out", str(d)]) == 0
        outs.append((d / "stats.csv").read_bytes())
    assert outs[0] == outs[1]
    rows = _stats(tmp_path / "r0" / "stats.csv")
    assert all(float(r["pcgTime"]) == 0.0 for r in rows)


def test_dump_hessian(drape, tmp_path):
    from ipcsim.sparse import load_matrix

    assert cli.main(["run", "--scene", str(drape), "--frames", "2", "--dump-hessian", "--out", str(tmp_path)]) == 0
    files = sorted((tmp_path / "hessian").glob("step*_newton*.txt"))
    assert files and files[0].name == "step00001_newton000.txt"
    A = load_matrix(files[0])
    D = A.to_dense()
    assert np.all(np.linalg.eigvalsh(D) > 0)


def test_usage_errors_exit_1(tmp_path, capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["run", "--frames", "3"])
    assert e.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        cli.main(["run", "--scene", "x", "--precond", "amg"])
    assert e.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as e:
        cli.main(["verify", "everything"])
    assert e.value.code == cli.EXIT_USAGE


def test_scene_errors_exit_2(tmp_path):
    assert cli.main(["run", "--scene", str(tmp_path / "missing.toml"), "--out", str(tmp_path)]) == cli.EXIT_SCENE
    bad = tmp_path / "bad.toml"
    bad.write_text('[[object]]\nname = "x"\nrole = "fem"\n')
    assert cli.main(["run", "--scene", str(bad), "--out", str(tmp_path)]) == cli.EXIT_SCENE


def test_solver_failure_exits_3(drape, tmp_path, monkeypatch, capsys):
    def boom(self):
        raise SolverError("line search failed")

    monkeypatch.setattr(cli.Simulator, "step", boom)
    assert cli.main(["run", "--scene", str(drape), "--frames", "3", "--out", str(tmp_path)]) == cli.EXIT_SOLVER
    assert "solver failure at step 1" in capsys.readouterr().err
    assert (tmp_path / "summary.txt").exists()


def test_verify_mas_fixture_subprocess():
    r = subprocess.run([sys.executable, "-m", "ipcsim", "verify", "mas-fixture"], capture_output=True, text=True)
    assert r.returncode == 0
    assert "levels=2, topSubdomains=1" in r.stdout and "PASS" in r.stdout


def test_threads_env_default(monkeypatch):
    monkeypatch.setenv(cli.THREADS_ENV, "3")
    assert cli.build_parser().parse_args(["run", "--scene", "s"]).threads == 3
    monkeypatch.setenv(cli.THREADS_ENV, "many")
    assert cli.build_parser().parse_args(["run", "--scene", "s"]).threads == 1


def test_preset_by_name(tmp_path):
    assert cli.main(["run", "--scene", "mas_fixture", "--frames", "2", "--subdomain", "32",
                     "--out", str(tmp_path)]) == 0
    assert len(_stats(tmp_path / "stats.csv")) == 2
