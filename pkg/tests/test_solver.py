import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import box, brick, scene
from ipcsim import meshgen
from ipcsim.mas import BlockJacobi, MasPreconditioner, partition_graph
from ipcsim.scene import DeformableMesh, Material
from ipcsim.solver import (SolverError, StepContext, System, Simulator, ip_value, ip_value_and_derivatives,
                           newton_step, pcg_solve)
from ipcsim.solver.newton import NewtonStats
from ipcsim.contact import stencils as find_stencils
from ipcsim.sparse import SortedSymBlockCoo, fast_hash_reduction, sort_and_canonicalize
from ipcsim.verify import _random_stream


def spd(rng, n):
    s = sort_and_canonicalize(_random_stream(rng, n, 6 * n))
    A = fast_hash_reduction(s, n)
    shift = np.abs(A.to_dense()).sum(1).max()
    idx = np.arange(n)
    from ipcsim.sparse import BlockTripletStream

    extra = BlockTripletStream.from_triplets(idx, idx, np.broadcast_to(shift * np.eye(3), (n, 3, 3)))
    return fast_hash_reduction(sort_and_canonicalize(BlockTripletStream.concat([s, extra])), n)


def test_pcg_trivial_systems():
    n = 5
    eye = SortedSymBlockCoo(np.arange(n), np.arange(n), np.broadcast_to(np.eye(3), (n, 3, 3)), n)
    b = np.arange(15.0)
    r = pcg_solve(eye, b)
    assert r.iterations == 1 and np.allclose(r.d, -b)
    r = pcg_solve(eye, np.zeros(15))
    assert r.iterations == 0 and not np.any(r.d)


@given(st.integers(0, 10_000))
@settings(max_examples=15)
def test_pcg_preconditioners_agree(seed):
    rng = np.random.default_rng(seed)
    A = spd(rng, 40)
    b = rng.normal(size=120)
    bj = BlockJacobi()
    bj.update(A)
    from ipcsim.mas.partition import adjacency_from_elements

    adj = (abs(A.to_scipy()) > 0).astype(float)
    import scipy.sparse as sps

    adj = sps.csr_matrix(adj[::3, ::3])
    adj.setdiag(0)
    mas = MasPreconditioner(partition_graph(adj, N=16))
    mas.update(A, adj)
    d1 = pcg_solve(A, b, bj, 1e-10).d
    d2 = pcg_solve(A, b, mas, 1e-10).d
    np.testing.assert_allclose(d1, d2, atol=1e-6 * np.abs(d1).max())
    np.testing.assert_allclose(A.to_dense() @ d1, -b, atol=1e-8 * np.abs(b).max())


def test_rest_scene_without_gravity_has_zero_energy():
    sim = Simulator(scene([box("b", (0.2, 0.2, 0.2), (2, 2, 2), (0, 0, 0))], gravity=(0, 0, 0)))
    s = sim.system
    U = sim.dofs()
    ctx = StepContext(sim.state.xS.copy(), sim.state.q.copy(), sim.kappa, s.full_positions(U))
    st_ = find_stencils(s.surface, s.full_positions(U), s.dhat, s.ground)
    der = ip_value_and_derivatives(s, ctx, U, st_)
    assert abs(der.energy) < 1e-12
    np.testing.assert_allclose(der.gradient, 0.0, atol=1e-9)


def test_free_fall_converges_in_one_newton_iteration():
    sim = Simulator(scene([box("b", (0.2, 0.2, 0.2), (1, 1, 1), (0, 1, 0), youngs=1e5)], dt=0.01,
                          newton_tol_rel=1e-6))
    x0 = sim.state.xS.copy()
    h = sim.step()
    assert h.newtonIters == 1 and h.alphas == [1.0]
    g = np.array([0, -9.81, 0])
    np.testing.assert_allclose(sim.state.xS, x0 + 1e-4 * g, atol=1e-12)
    np.testing.assert_allclose(sim.state.vS, np.broadcast_to(0.01 * g, x0.shape), atol=1e-10)


def test_ballistic_affine_body_matches_closed_form():
    v0 = np.array([0.3, 2.0, -0.1])
    sim = Simulator(scene(bodies=[brick("b", (0.2, 0.1, 0.3), (0, 0, 0), v0)], dt=0.01, newton_tol_rel=1e-6))
    dt, g = 0.01, np.array([0, -9.81, 0])
    p0 = sim.state.q[0, :3].copy()
    for k in range(1, 101):
        sim.step()
        # implicit Euler: v_k = v0 + k dt g, p_k = p0 + k dt v0 + dt^2 g k (k + 1) / 2
        expected = p0 + k * dt * v0 + dt * dt * g * k * (k + 1) / 2
        assert np.abs(sim.state.q[0, :3] - expected).max() <= 1e-10
        assert np.abs(sim.state.q[0, 3:] - np.eye(3).ravel()).max() <= 1e-10


def _coupled_scene():
    v = np.array([[0, 0, 0], [0.1, 0, 0], [0, 0, 0.1], [0.03, 0.1, 0.03], [0.1, 0, 0.1]]) + [0, 0.0004, 0]
    t = np.array([[0, 2, 1, 3], [1, 2, 4, 3]])
    tets = DeformableMesh("tets", v, t, material=Material(youngs=1e5))
    body = brick("b", (0.1, 0.05, 0.1), (0.0, 0.1006, 0.0))
    return scene([tets], [body], ground=0.0, dhat_rel=5e-3)


def test_gradient_matches_finite_differences_on_coupled_scene():
    sim = Simulator(_coupled_scene())
    s = sim.system
    rng = np.random.default_rng(0)
    U = sim.dofs() + 1e-5 * rng.normal(size=sim.dofs().shape)
    X0 = s.full_positions(U)
    ctx = StepContext(sim.state.xS + 1e-3, sim.state.q + 1e-3, 1e4, X0)
    st_ = find_stencils(s.surface, X0, 2 * s.dhat, s.ground)
    der = ip_value_and_derivatives(s, ctx, U, st_)
    assert len(der.contacts[0]) > 0 and "barrier" in der.terms
    assert der.energy == pytest.approx(ip_value(s, ctx, U, st_), rel=1e-12)
    h = 1e-8
    fd = np.zeros(U.size)
    for i in range(U.size):
        e = np.zeros(U.size)
        e[i] = h
        fd[i] = (ip_value(s, ctx, U + e.reshape(U.shape), st_) - ip_value(s, ctx, U - e.reshape(U.shape), st_)) / (2 * h)
    g = der.gradient.ravel()
    assert np.linalg.norm(fd - g) <= 1e-4 * np.linalg.norm(g)
    H = der.hessian.to_dense()
    np.testing.assert_allclose(H, H.T, atol=1e-8 * np.abs(H).max())


def test_quadratic_problem_takes_one_full_step():
    sim = Simulator(scene([box("b", (0.2, 0.2, 0.2), (1, 1, 1), (0, 0, 0))], gravity=(0, 0, 0)))
    s = sim.system
    U = sim.dofs()
    xhat = U + np.array([0.01, -0.02, 0.005])
    ctx = StepContext(xhat, sim.state.q, sim.kappa, U)
    stats = NewtonStats()
    U1, done = newton_step(sim, ctx, U, stats)
    assert not done and stats.alphas == [1.0]
    np.testing.assert_allclose(U1, xhat, atol=1e-10)
    _, done = newton_step(sim, ctx, U1, stats)
    assert done


def test_momentum_is_conserved_without_gravity():
    a = box("a", (0.1, 0.1, 0.1), (2, 2, 2), (0, 0, 0), youngs=1e5)
    b = box("b", (0.1, 0.1, 0.1), (2, 2, 2), (0.12, 0.03, 0.02), youngs=1e5)
    a.velocity = np.array([1.0, 0.0, 0.0])
    b.velocity = np.array([-0.5, 0.1, 0.0])
    sim = Simulator(scene([a, b], gravity=(0, 0, 0), dt=0.01, newton_tol_rel=1e-6, pcg_rel_tol=1e-8))
    m = sim.system.mass[:, None]
    p0 = (m * sim.state.vS).sum(0)
    hit = False
    for _ in range(6):
        h = sim.step()
        hit |= np.isfinite(h.minDistance) and h.minDistance < sim.system.dhat
        p = (m * sim.state.vS).sum(0)
        assert np.linalg.norm(p - p0) <= 1e-8 * np.linalg.norm(p0)
        p0 = p
    assert hit


def test_approaching_spheres_stay_separated():
    v0, f0 = meshgen.icosphere(0.1, 2, (0, 0, 0))
    v1, f1 = meshgen.icosphere(0.1, 2, (0.205, 0.01, 0))
    mat = Material(density=200.0, membrane=1e4, strain_limit=1e6, bending=1e-3)
    a = DeformableMesh("a", v0, triangles=f0, material=mat, velocity=(1.0, 0, 0))
    b = DeformableMesh("b", v1, triangles=f1, material=mat, velocity=(-1.0, 0, 0))
    sim = Simulator(scene([a, b], gravity=(0, 0, 0), dt=0.005))
    for _ in range(8):
        h = sim.step()
        assert all(d > 0 for d in h.minDistances)
        assert np.all(np.diff(h.energies) < 0)
    assert min(min(h.minDistances, default=np.inf) for h in sim.history) < sim.system.dhat


def test_hanging_cloth_reaches_equilibrium():
    v, f = meshgen.grid_triangles((0.2, 0.2), (4, 4), "xy")
    top = np.nonzero(v[:, 1] >= 0.2 - 1e-12)[0]
    mat = Material(density=200.0, membrane=5e4, strain_limit=5e6, bending=1e-4)
    cloth = DeformableMesh("c", v, triangles=f, material=mat, pinned=top)
    sim = Simulator(scene([cloth], dt=0.02))
    for _ in range(300):
        h = sim.step()
        if h.newtonIters == 0:
            break
    assert h.newtonIters == 0
    x = sim.state.xS.copy()
    for _ in range(3):
        assert sim.step().newtonIters == 0
    np.testing.assert_array_equal(sim.state.xS, x)
    np.testing.assert_array_equal(sim.state.xS[top], v[top])


def test_sliding_block_decelerates_at_coulomb_rate():
    mu, g = 0.5, 9.81
    b = box("b", (0.1, 0.05, 0.1), (1, 1, 1), (0, 0.0002, 0), youngs=1e6)
    b.velocity = np.array([1.5, 0.0, 0.0])
    sim = Simulator(scene([b], ground=0.0, dt=0.005, friction_mu=mu, dhat_rel=1e-3,
                          static_friction_tol_rel=1e-5, newton_tol_rel=1e-4))
    m = sim.system.mass[:, None]
    vx = []
    for _ in range(60):
        sim.step()
        vx.append(float((m * sim.state.vS).sum(0)[0] / m.sum()))
    decel = -(vx[59] - vx[9]) / (50 * 0.005)
    assert decel == pytest.approx(mu * g, rel=0.05)


def test_line_search_failure_raises(monkeypatch):
    from ipcsim.solver import newton, pcg

    def uphill(A, b, *args, **kwargs):
        return pcg.PcgResult(np.asarray(b, float).copy(), 1, True, 0.0)

    monkeypatch.setattr(newton, "pcg_solve", uphill)
    sim = Simulator(scene([box("b", (0.2, 0.2, 0.2), (1, 1, 1), (0, 1, 0))]))
    with pytest.raises(SolverError, match="line search"):
        sim.step()


def test_pinned_vertices_follow_script():
    v, t = meshgen.box_tets((0.2, 0.1, 0.1), (2, 1, 1))
    pins = np.nonzero(v[:, 0] <= 1e-12)[0]
    m = DeformableMesh("m", v, t, material=Material(youngs=1e5), pinned=pins, pin_velocity=(0, 0.5, 0))
    sim = Simulator(scene([m], dt=0.01))
    for _ in range(5):
        sim.step()
    np.testing.assert_allclose(sim.state.xS[pins], v[pins] + [0, 0.025, 0], atol=1e-14)


def _relaxation(scale):
    m = box("b", (0.2 * scale, 0.1 * scale, 0.1 * scale), (3, 2, 2), (0, 0, 0), youngs=1e5,
            density=1000.0 / scale ** 2)
    sim = Simulator(scene([m], gravity=(0, 0, 0), dt=0.01))
    sim.state.xS = sim.state.xS * [1.3, 0.9, 1.0]
    return sim


def test_newton_iteration_count_is_scale_invariant():
    # density ~ 1/s^2 keeps inertia and elasticity in proportion, so iterates scale exactly
    a, b = _relaxation(1.0), _relaxation(10.0)
    ca = [a.step().newtonIters for _ in range(5)]
    cb = [b.step().newtonIters for _ in range(5)]
    assert ca == cb and sum(ca) > 5
    np.testing.assert_allclose(b.state.xS, 10.0 * a.state.xS, rtol=1e-6, atol=1e-9)


def test_preconditioners_reach_the_same_geometry():
    sc = lambda: scene([box("a", (0.2, 0.1, 0.2), (3, 2, 3), (0, 0.0005, 0), youngs=1e5)], ground=0.0, dt=0.01)
    out = {}
    for name in ("cemas16", "blockJacobi", "masMortonFixture"):
        sim = Simulator(sc(), preconditioner=name)
        cg = sum(sim.step().cgItersTotal for _ in range(10))
        out[name] = (sim.state.xS.copy(), cg)
    l = sim.system.diagonal
    ref = out["blockJacobi"][0]
    for name, (x, _) in out.items():
        assert np.abs(x - ref).max() <= 1e-4 * l, name
    assert out["cemas16"][1] != out["blockJacobi"][1]


def test_deterministic_runs_are_bitwise_identical():
    def run():
        sim = Simulator(_coupled_scene(), deterministic=True)
        hist = [sim.step() for _ in range(4)]
        return sim.dofs(), [(h.energies, h.cgItersPerNewton, h.alphas) for h in hist]

    (u1, h1), (u2, h2) = run(), run()
    assert u1.tobytes() == u2.tobytes() and h1 == h2
