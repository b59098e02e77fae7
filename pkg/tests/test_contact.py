import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.optimize import minimize

from ipcsim.contact import (EE, PG, PT, PenetrationError, SurfacePrimitives, barrier, barrier_pair, broad_phase,
                            brute_force_pairs, ccd_max_step, find_contacts, friction_energy,
                            friction_pairs_update, mollifier, pair_distance, pair_toi, region_name, stencils)
from ipcsim.meshgen import box_tets, boundary_faces, unique_edges


def _pt_oracle(X):
    p, a, b, c = X

    def f(z):
        return np.sum((p - (a + z[0] * (b - a) + z[1] * (c - a))) ** 2)

    g = np.linspace(0, 1, 21)
    U, V = np.meshgrid(g, g)
    ok = U + V <= 1
    start = min(zip(U[ok], V[ok]), key=lambda z: f(z))
    res = minimize(f, start, method="SLSQP", bounds=[(0, 1), (0, 1)],
                   constraints=[{"type": "ineq", "fun": lambda z: 1 - z[0] - z[1]}], options={"ftol": 1e-15})
    return min(res.fun, f(start))


def _ee_oracle(X):
    a0, a1, b0, b1 = X

    def f(z):
        return np.sum((a0 + z[0] * (a1 - a0) - b0 - z[1] * (b1 - b0)) ** 2)

    g = np.linspace(0, 1, 21)
    start = min(((s, t) for s in g for t in g), key=lambda z: f(z))
    res = minimize(f, start, method="SLSQP", bounds=[(0, 1), (0, 1)], options={"ftol": 1e-15})
    return min(res.fun, f(start))


@given(st.integers(0, 100_000))
def test_point_triangle_distance_matches_constrained_minimum(seed):
    X = np.random.default_rng(seed).normal(size=(4, 3))
    d2 = pair_distance(PT, X[None], False)[0][0]
    assert d2 == pytest.approx(_pt_oracle(X), rel=1e-6, abs=1e-10)


@given(st.integers(0, 100_000))
def test_edge_edge_distance_matches_constrained_minimum(seed):
    X = np.random.default_rng(seed).normal(size=(4, 3))
    d2 = pair_distance(EE, X[None], False)[0][0]
    assert d2 == pytest.approx(_ee_oracle(X), rel=1e-6, abs=1e-10)


def test_parallel_edges_use_endpoint_kernels():
    X = np.array([[[0, 0, 0], [1, 0, 0], [0.2, 0.5, 0], [1.5, 0.5, 0]]], float)
    d2, g, H, region = pair_distance(EE, X)
    assert d2[0] == pytest.approx(0.25)
    assert region_name(EE, region[0]) != "a-b"
    assert np.isfinite(g).all() and np.isfinite(H).all()


def test_point_ground_distance():
    X = np.zeros((2, 4, 3))
    X[:, 0, 1] = [0.3, 0.7]
    d2, g, _, region = pair_distance(PG, X, ground=0.1)
    np.testing.assert_allclose(d2, [0.04, 0.36])
    np.testing.assert_allclose(g[:, 1], [0.4, 1.2])
    assert region_name(PG, region[0]) == "p-ground"


@given(st.integers(0, 100_000), st.sampled_from([PT, EE]))
def test_distance_gradient_matches_finite_differences(seed, kind):
    X = np.random.default_rng(seed).normal(size=(1, 4, 3))
    d2, g, H, region = pair_distance(kind, X)
    h = 1e-6
    for i in range(12):
        xp, xm = X.copy().reshape(1, 12), X.copy().reshape(1, 12)
        xp[0, i] += h
        xm[0, i] -= h
        rp, rm = pair_distance(kind, xp.reshape(1, 4, 3)), pair_distance(kind, xm.reshape(1, 4, 3))
        if rp[3][0] != region[0] or rm[3][0] != region[0]:
            return  # straddles a region boundary
        assert (rp[0][0] - rm[0][0]) / (2 * h) == pytest.approx(g[0, i], rel=1e-4, abs=1e-6)


def test_barrier_support_and_smoothness():
    s_hat = 0.01
    b, db, ddb = barrier(np.array([0.5 * s_hat, s_hat, 2 * s_hat]), s_hat)
    assert b[0] > 0 and db[0] < 0 and ddb[0] > 0
    assert b[1] == db[1] == ddb[1] == 0.0
    assert b[2] == 0.0
    b_near, db_near, _ = barrier(s_hat * (1 - 1e-6), s_hat)
    assert abs(b_near) < 1e-15 and abs(db_near) < 1e-8
    s = np.linspace(1e-6, s_hat, 50)
    assert np.all(np.diff(barrier(s, s_hat)[0]) < 0)


def test_barrier_pair_zero_beyond_dhat_and_rejects_contact():
    X = np.zeros((1, 4, 3))
    X[0, 0, 1] = 0.2
    e = barrier_pair(PG, X, 0.1, 1e3)
    assert e.total == 0.0 and not np.any(e.hessian)
    X[0, 0, 1] = 0.0
    with pytest.raises(PenetrationError):
        barrier_pair(PG, X, 0.1, 1e3)


def test_ccd_point_falling_on_triangle():
    X = np.array([[[0.2, 1.0, 0.2], [0, 0, 0], [1, 0, 0], [0, 0, 1]]], float)
    P = np.zeros_like(X)
    P[0, 0, 1] = -2.0
    t = pair_toi(PT, X, P)[0]
    assert 0.4 < t < 0.5  # exact impact at 0.5, conservative by the slack factor
    x_hit = X + t * P
    assert pair_distance(PT, x_hit, False)[0][0] > 0


@given(st.integers(0, 100_000))
def test_ccd_step_keeps_pairs_separated(seed):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(20, 4, 3))
    P = 3.0 * rng.normal(size=(20, 4, 3))
    kind = rng.choice([PT, EE], 20)
    alpha = ccd_max_step(kind, X, P)
    assert 0 < alpha <= 1
    for a in np.linspace(0, alpha, 25):
        assert np.all(pair_distance(kind, X + a * P, False)[0] > 0)


def test_ccd_ground():
    X = np.zeros((1, 4, 3))
    X[0, 0, 1] = 1.0
    P = np.zeros_like(X)
    P[0, 0, 1] = -4.0
    t = ccd_max_step(PG, X, P)
    assert 0.2 < t < 0.25
    assert ccd_max_step(np.zeros(0, int), np.zeros((0, 4, 3)), np.zeros((0, 4, 3))) == 1.0


def _two_boxes(gap):
    v0, t0 = box_tets((1, 1, 1), (2, 2, 2))
    v1, t1 = box_tets((1, 1, 1), (2, 2, 2), (0.1, 1 + gap, 0.2))
    x = np.concatenate([v0, v1])
    tris = np.concatenate([boundary_faces(t0, v0), boundary_faces(t1, v1) + len(v0)])
    prims = SurfacePrimitives(np.unique(tris), unique_edges(tris), tris, np.full(len(x), -1))
    return prims, x


def test_broad_phase_covers_brute_force():
    prims, x = _two_boxes(0.05)
    pt, ee = broad_phase(prims, x, 0.1)
    bpt, bee = brute_force_pairs(prims, x, 0.1)
    fast = {tuple(r) for r in pt}
    for r in bpt:
        assert tuple(r) in fast
    fast = {tuple(sorted([tuple(sorted(r[:2])), tuple(sorted(r[2:]))])) for r in ee}
    for r in bee:
        assert tuple(sorted([tuple(sorted(r[:2])), tuple(sorted(r[2:]))])) in fast


def test_single_rigid_body_has_no_self_pairs():
    prims, x = _two_boxes(0.05)
    prims.rigid[:] = 0
    pt, ee = broad_phase(prims, x, 0.5)
    assert len(pt) == 0 and len(ee) == 0


def test_find_contacts_reports_only_active_pairs():
    prims, x = _two_boxes(0.01)
    cs = find_contacts(prims, x, 0.02, ground=-0.005)
    assert len(cs) > 0
    assert cs.min_distance == pytest.approx(0.005)
    assert np.all(cs.distance_sq < 0.02 ** 2)
    pairs = list(cs.pairs(0.02, 1.0))
    assert all(p.active for p in pairs)
    kind, nodes = stencils(prims, x, 0.02, ground=-0.005)
    assert len(kind) >= len(cs)


def test_mollifier_is_c1():
    eps = 1e-3
    f0, f1, _ = mollifier(np.array([eps * (1 - 1e-9), eps]), eps)
    assert f0[0] == pytest.approx(f0[1]) and f1[0] == pytest.approx(f1[1])
    assert mollifier(np.array([0.0]), eps)[1][0] == 0.0


def test_friction_resists_sliding():
    X0 = np.zeros((1, 4, 3))
    X0[0, 0, 1] = 0.01
    fp = friction_pairs_update([PG], np.array([[0, -1, -1, -1]]), X0, 0.05, 1e3)
    assert len(fp) == 1 and fp.lambda_n[0] > 0
    X = X0.copy()
    X[0, 0, 0] += 0.1
    e = friction_energy(fp, X, X0, 0.5, 1e-4)
    assert e.total > 0
    assert e.gradient[0, 0, 0] > 0  # pushes back against +x motion
    assert e.gradient[0, 0, 1] == 0.0
    assert e.gradient[0, 0, 0] == pytest.approx(0.5 * fp.lambda_n[0], rel=1e-9)


def test_distant_boxes_have_no_candidates():
    prims, x = _two_boxes(5.0)
    n0 = len(x) // 2
    for st_ in broad_phase(prims, x, 1e-3):
        side = st_ >= n0
        assert np.all(side == side[:, :1])  # only same-box candidates


def test_broad_phase_ignores_primitive_order():
    prims, x = _two_boxes(0.02)
    rng = np.random.default_rng(0)
    shuffled = SurfacePrimitives(rng.permutation(prims.vertices), rng.permutation(prims.edges),
                                 rng.permutation(prims.triangles), prims.rigid)
    a = broad_phase(prims, x, 0.05)
    b = broad_phase(shuffled, x, 0.05)
    assert {tuple(r) for r in a[0]} == {tuple(r) for r in b[0]}
    canon = lambda ee: {frozenset([tuple(sorted(r[:2])), tuple(sorted(r[2:]))]) for r in ee}
    assert canon(a[1]) == canon(b[1])


def test_distance_hand_cases():
    X = np.array([[[0.2, 0.3, 0.2], [0, 0, 0], [1, 0, 0], [0, 0, 1]]], float)
    assert pair_distance(PT, X, False)[0][0] == pytest.approx(0.09)
    E = np.array([[[0, 0, 0], [1, 0, 0], [0, 0.4, 0], [1, 0.4, 0]]], float)
    assert pair_distance(EE, E, False)[0][0] == pytest.approx(0.16)


def test_barrier_grows_without_bound_and_matches_fd():
    d = np.geomspace(0.3, 1e-12, 30)
    b = barrier(d * d, 0.1)[0]
    assert np.all(np.diff(b) > 0) and b[-1] > 10 * b[1]
    dhat = 0.1
    X = np.zeros((1, 4, 3))
    X[0, 0, 1] = dhat / 2
    e = barrier_pair(PG, X, dhat, 1.0)
    h = 1e-7
    Xp, Xm = X.copy(), X.copy()
    Xp[0, 0, 1] += h
    Xm[0, 0, 1] -= h
    fd = (barrier_pair(PG, Xp, dhat, 1.0).total - barrier_pair(PG, Xm, dhat, 1.0).total) / (2 * h)
    assert fd == pytest.approx(e.gradient[0, 0, 1], rel=1e-4)


def test_ccd_separating_motion_allows_full_step():
    X = np.array([[[0.2, 0.1, 0.2], [0, 0, 0], [1, 0, 0], [0, 0, 1]]], float)
    P = np.zeros_like(X)
    P[0, 0, 1] = 1.0
    assert ccd_max_step(PT, X, P) == 1.0


def test_ccd_plane_approach_at_twice_the_gap():
    g = 0.3
    X = np.array([[[0.2, g, 0.2], [-5, 0, -5], [5, 0, -5], [0, 0, 5]]], float)
    P = np.zeros_like(X)
    P[0, 0, 1] = -2 * g
    assert 0.4 < ccd_max_step(PT, X, P) <= 0.5


@given(st.integers(0, 100_000))
def test_friction_force_inside_coulomb_cone(seed):
    rng = np.random.default_rng(seed)
    X0 = rng.normal(size=(6, 4, 3))
    X0[:, 0] = np.einsum("nk,nkj->nj", rng.dirichlet([1, 1, 1], 6), X0[:, 1:])
    nrm = np.cross(X0[:, 2] - X0[:, 1], X0[:, 3] - X0[:, 1])
    X0[:, 0] += 0.01 * nrm / np.linalg.norm(nrm, axis=1, keepdims=True)
    fp = friction_pairs_update(np.full(6, PT), np.arange(24).reshape(6, 4), X0, 0.05, 1e3)
    mu = 0.4
    X = X0 + rng.normal(scale=10 ** rng.uniform(-6, -1), size=X0.shape)
    e = friction_energy(fp, X, X0, mu, 1e-4)
    force = np.linalg.norm(e.gradient[:, 0], axis=1)
    assert np.all(force <= mu * fp.lambda_n + 1e-10)
    zero = friction_energy(fp, X0, X0, mu, 1e-4)
    assert not np.any(zero.gradient)
