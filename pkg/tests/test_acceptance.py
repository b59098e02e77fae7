"""The ten acceptance criteria at their stated tolerances, one report line each."""
import time

import numpy as np
import pytest

from ipcsim import presets
from ipcsim.scene import abd_world_positions, compute_masses
from ipcsim.solver import Simulator
from ipcsim.verify import fd_checks, kernel_oracles, lane_example, mas_fixture, strain_limit_eigen, stretch_study

from helpers import brick, scene

pytestmark = pytest.mark.slow


def test_c01_kernel_oracles(criterion):
    r = kernel_oracles(instances=1000)
    ok = (r.hash_exact and r.segment_exact and r.spmv_exact and r.abd_reproducible
          and max(r.hash_rel, r.segment_rel, r.spmv_rel) <= 1e-12
          and max(r.abd_rel_deterministic, r.abd_rel_parallel) <= 1e-10 and r.seconds < 60)
    assert criterion(1, ok, f"{r.instances} instances, exact={r.hash_exact and r.segment_exact and r.spmv_exact}, "
                            f"parallel rel={max(r.hash_rel, r.segment_rel, r.spmv_rel):.1e}, "
                            f"abd rel={max(r.abd_rel_deterministic, r.abd_rel_parallel):.1e}, {r.seconds:.1f} s")


def test_c02_lane_example(criterion):
    out = lane_example()
    assert criterion(2, out.tolist() == [3.0, 3.0, 2.0], f"segment sums {out.tolist()}")


def test_c03_strain_limit_eigensystem(criterion):
    t0 = time.perf_counter()
    gap, lo = strain_limit_eigen(samples=1000)
    dt = time.perf_counter() - t0
    assert criterion(3, gap <= 1e-8 and lo >= 0.0 and dt < 10,
                     f"max eigenvalue gap {gap:.1e}, min eigenvalue {lo:.2e}, {dt:.1f} s")


def test_c04_derivative_consistency(criterion):
    t0 = time.perf_counter()
    res = fd_checks()
    dt = time.perf_counter() - t0
    eg = max(v[0] for v in res.values())
    eh = max(v[1] for v in res.values())
    assert criterion(4, eg <= 1e-4 and eh <= 1e-3 and dt < 60,
                     f"{len(res)} energies, gradient rel {eg:.1e}, Hessian rel {eh:.1e}, {dt:.1f} s")


def test_c05_mas_fixture(criterion):
    res = mas_fixture()
    c, m = res["connectivity"], res["morton"]
    ok = c["levels"] == 2 and c["topSubdomains"] == 1 and m["levels"] == 3
    assert criterion(5, ok, f"connectivity levels={c['levels']} top={c['topSubdomains']}, morton levels={m['levels']}")


def test_c06_preconditioner_ratio(criterion):
    t0 = time.perf_counter()
    avg = {}
    for name in ("cemas16", "blockJacobi"):
        sim = Simulator(presets.load(presets.BEAM), name)
        hist = [sim.step() for _ in range(5)]
        assert sim.system.config.pcg_rel_tol == 1e-4
        avg[name] = sum(h.cgItersTotal for h in hist) / sum(len(h.cgItersPerNewton) for h in hist)
    dt = time.perf_counter() - t0
    ratio = avg["cemas16"] / avg["blockJacobi"]
    assert criterion(6, ratio <= 0.6 and dt < 300, f"avg cg/newton cemas16 {avg['cemas16']:.0f}, "
                                                    f"blockJacobi {avg['blockJacobi']:.0f}, ratio {ratio:.2f}, {dt:.0f} s")


def test_c07_stretch_study(criterion):
    t0 = time.perf_counter()
    rows = stretch_study()
    dt = time.perf_counter() - t0
    lo, hi = rows[0], rows[-1]
    ok = (1.0 <= lo.max_stretch <= 1.5 and lo.mean_stretch <= 1.05 and hi.max_stretch <= 1.12
          and all(a.max_stretch >= b.max_stretch for a, b in zip(rows, rows[1:])) and dt < 600)
    table = ", ".join(f"{r.stiffness:.0e}: max {r.max_stretch:.3f} mean {r.mean_stretch:.4f}" for r in rows)
    assert criterion(7, ok, f"{table}, {dt:.0f} s")


def test_c08_feasibility_and_monotonicity(criterion):
    t0 = time.perf_counter()
    bad = []
    for name in presets.names():
        sim = Simulator(presets.load(name))
        tol = sim.system.config.pcg_rel_tol
        for _ in range(100):
            h = sim.step()
            if min(h.minDistances, default=np.inf) <= 0 or not np.all(np.diff(h.energies) < 0):
                bad.append(name)
            if sum(r > tol for r in h.pcgResiduals) > h.pcgMaxIterFlags:
                bad.append(name)
    dt = time.perf_counter() - t0
    assert criterion(8, not bad and dt < 900, f"{len(presets.names())} presets x 100 steps, "
                                              f"violations {sorted(set(bad))}, {dt:.0f} s")


def test_c09_abd_kinematics(criterion):
    dt, g = 0.01, np.array([0.0, -9.81, 0.0])
    v0 = np.array([0.4, 1.5, -0.2])
    sim = Simulator(scene(bodies=[brick("b", (0.3, 0.1, 0.2), (0, 0, 0), v0)], dt=dt, newton_tol_rel=1e-6))
    p0 = sim.state.q[0, :3].copy()
    err_p = err_A = 0.0
    for k in range(1, 101):
        sim.step()
        exact = p0 + k * dt * v0 + dt * dt * g * k * (k + 1) / 2
        err_p = max(err_p, np.abs(sim.state.q[0, :3] - exact).max())
        err_A = max(err_A, np.abs(sim.state.q[0, 3:] - np.eye(3).ravel()).max())
    pair = presets.load(presets.PAIR_ABD)
    M = compute_masses(pair.meshes, pair.bodies)[1][0]
    lam = np.linalg.eigvalsh(M).min()
    assert criterion(9, err_p <= 1e-10 and err_A <= 1e-10 and lam > 0,
                     f"position error {err_p:.1e}, A error {err_A:.1e}, min reducedMass eigenvalue {lam:.2e}")


def test_c10_coupling_equivalence(criterion):
    t0 = time.perf_counter()
    fem, abd = Simulator(presets.load(presets.PAIR)), Simulator(presets.load(presets.PAIR_ABD))
    for _ in range(25):
        fem.step()
        abd.step()
    contact = min(h.minDistance for h in fem.history) < fem.system.dhat
    slab, cube = fem.system.scene.meshes
    ns = len(slab.vertices)
    s_slab, s_cube = np.unique(slab.surface), np.unique(cube.surface)
    d_slab = np.abs(fem.state.xS[s_slab] - abd.state.xS[s_slab]).max()
    cube_abd = abd_world_positions(abd.system.scene.bodies[0], abd.state.q[0])
    d_cube = np.abs(fem.state.xS[ns:][s_cube] - cube_abd[s_cube]).max()
    l = fem.system.diagonal
    dt = time.perf_counter() - t0
    assert criterion(10, contact and max(d_slab, d_cube) <= 2e-2 * l and dt < 600,
                     f"max surface deviation {max(d_slab, d_cube):.1e} (bound {2e-2 * l:.1e}), "
                     f"in contact={contact}, {dt:.0f} s")
