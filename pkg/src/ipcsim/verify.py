"""Oracle checks shared by the ``verify`` command and the acceptance tests.

Each check returns plain measured values; thresholds live with the callers
so the same numbers can be printed, asserted or tabulated.
"""
import time
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sps

from . import presets
from .contact import EE, PG, PT, barrier_pair
from .elastic import (abd_orthogonality, cubic_sl, cubic_sl_eigenvalues, fbw_membrane, hinge_bending,
                      membrane_deformation, principal_stretches, shear_energy, stable_neo_hookean)
from .elastic.membrane import cubic_sl_F
from .mas import build_hierarchy, hierarchy_summary, ordered_partition, partition_graph
from .scene import abd_jacobian
from .sparse import (BlockTripletStream, NodeLayout, SortedSymBlockCoo, fast_hash_reduction,
                     fast_segment_reduction, sort_and_canonicalize, srbk_spmv, two_level_abd_reduce)

SUITES = ("fd-checks", "kernel-oracles", "mas-fixture", "stretch-study")

# sixteen nodes a..p and their couplings, subdomain size four
FIXTURE_EDGES = "ij jk kl ik jl il fh af ch bd dg dm eo en np mo hi".split()
FIXTURE_SIZE = 4


# -- MAS fixture -------------------------------------------------------------

def fixture_adjacency():
    r = [ord(e[0]) - 97 for e in FIXTURE_EDGES]
    c = [ord(e[1]) - 97 for e in FIXTURE_EDGES]
    A = sps.coo_matrix((np.ones(len(r)), (r, c)), shape=(16, 16))
    return (A + A.T).tocsr()


def mas_fixture():
    """Level counts of the connectivity-built and the fixed-order hierarchies."""
    A = fixture_adjacency()
    conn = build_hierarchy(partition_graph(A, N=FIXTURE_SIZE), A)
    morton = build_hierarchy(ordered_partition(np.arange(16), FIXTURE_SIZE), A)
    return {"connectivity": hierarchy_summary(conn), "morton": hierarchy_summary(morton)}


# -- reduction kernels -------------------------------------------------------

def lane_example():
    """Eight unit values with run heads at 0, 3 and 6."""
    O = np.array([0, 0, 0, 1, 1, 1, 2, 2])
    return fast_segment_reduction(O, np.ones(8), width=32)


def _rel(a, b):
    scale = np.abs(b).max(initial=0.0)
    return float(np.abs(a - b).max(initial=0.0) / scale) if scale > 0 else float(np.abs(a).max(initial=0.0))


def _random_stream(rng, n_nodes, n_entries):
    r = rng.integers(0, n_nodes, n_entries)
    c = rng.integers(0, n_nodes, n_entries)
    B = rng.normal(size=(n_entries, 3, 3))
    d = r == c
    B[d] = B[d] + np.swapaxes(B[d], 1, 2)
    return BlockTripletStream.from_triplets(r, c, B)


def _dict_reduce(stream):
    acc = {}
    for k, v in zip(stream.keys.tolist(), stream.values):
        acc[k] = acc[k] + v if k in acc else v.copy()
    keys = np.array(sorted(acc), np.uint64)
    return keys, np.array([acc[k] for k in keys.tolist()]).reshape(-1, 3, 3)


def _segment_oracle(O, V, n_out):
    R = np.zeros((n_out,) + V.shape[1:])
    for o, v in zip(O, V):
        R[o] = R[o] + v
    return R


def _spmv_oracle(A, x):
    """Block-row products visited by ascending column over the full symmetric pattern."""
    full = {}
    for i, j, b in zip(A.rows.tolist(), A.cols.tolist(), A.blocks):
        full[(i, j)] = b
        if i != j:
            full[(j, i)] = b.T
    X = x.reshape(-1, 3)
    y = np.zeros((A.n_rows, 3))
    for (i, j) in sorted(full):
        b = full[(i, j)]
        y[i] = y[i] + (b[:, 0] * X[j, 0] + b[:, 1] * X[j, 1] + b[:, 2] * X[j, 2])
    return y.reshape(-1)


def _abd_oracle(stream, layout, n_dof):
    """Dense sum over every contact block of J_r^T C J_c (plus its mirror)."""
    M = np.zeros((3 * n_dof, 3 * n_dof))
    for r, c, C in zip(stream.rows, stream.cols, stream.values):
        def embed(node):
            if layout.body[node] < 0:
                return np.eye(3), slice(3 * layout.dof[node], 3 * layout.dof[node] + 3)
            d = layout.dof[node]
            return abd_jacobian(layout.rest[node][None])[0], slice(3 * d, 3 * d + 12)
        Jr, sr = embed(r)
        Jc, sc = embed(c)
        G = Jr.T @ C @ Jc
        M[sr, sc] += G
        if r != c:
            M[sc, sr] += G.T
    return M


def _random_layout(rng):
    n_fem = int(rng.integers(0, 6))
    n_bodies = int(rng.integers(1, 4))
    per = rng.integers(1, 5, n_bodies)
    body = np.concatenate([np.full(n_fem, -1)] + [np.full(k, b) for b, k in enumerate(per)])
    dof = np.concatenate([np.arange(n_fem)] + [np.full(k, n_fem + 4 * b) for b, k in enumerate(per)])
    rest = rng.normal(size=(len(body), 3))
    rest[:n_fem] = np.nan
    return NodeLayout(body, dof, rest), n_fem + 4 * n_bodies


@dataclass
class KernelReport:
    instances: int
    hash_exact: bool
    hash_rel: float
    segment_exact: bool
    segment_rel: float
    spmv_exact: bool
    spmv_rel: float
    abd_rel_deterministic: float
    abd_rel_parallel: float
    abd_reproducible: bool
    lane: list
    seconds: float


def kernel_oracles(instances=1000, seed=0):
    """Compare every reduction kernel against its brute-force oracle."""
    rng = np.random.default_rng(seed)
    t0 = time.perf_counter()
    rep = dict(hash_exact=True, hash_rel=0.0, segment_exact=True, segment_rel=0.0, spmv_exact=True,
               spmv_rel=0.0, abd_rel_deterministic=0.0, abd_rel_parallel=0.0, abd_reproducible=True)
    for _ in range(instances):
        width = int(rng.choice([2, 4, 8, 32]))
        n_nodes = int(rng.integers(1, 40))
        stream = sort_and_canonicalize(_random_stream(rng, n_nodes, int(rng.integers(1, 200))))
        keys, vals = _dict_reduce(stream)
        for det in (True, False):
            A = fast_hash_reduction(stream, n_nodes, width, det)
            same_keys = np.array_equal(A.rows, (keys >> np.uint64(32)).astype(np.int64))
            if det:
                rep["hash_exact"] &= same_keys and np.array_equal(A.blocks, vals)
            else:
                rep["hash_rel"] = max(rep["hash_rel"], _rel(A.blocks, vals) if same_keys else np.inf)

        n = int(rng.integers(1, 300))
        O = np.sort(rng.integers(0, max(n // 3, 1), n))
        V = rng.normal(size=(n, 3))
        ref = _segment_oracle(O, V, int(O[-1]) + 1)
        rep["segment_exact"] &= np.array_equal(fast_segment_reduction(O, V, width, True), ref)
        rep["segment_rel"] = max(rep["segment_rel"], _rel(fast_segment_reduction(O, V, width, False), ref))

        x = rng.normal(size=3 * n_nodes)
        ref = _spmv_oracle(A, x)
        rep["spmv_exact"] &= np.array_equal(srbk_spmv(A, x, width, True), ref)
        rep["spmv_rel"] = max(rep["spmv_rel"], _rel(srbk_spmv(A, x, width, False), ref))

        layout, n_dof = _random_layout(rng)
        raw = _random_stream(rng, len(layout.body), int(rng.integers(1, 40)))
        ref = _abd_oracle(raw, layout, n_dof)
        outs = []
        for det, key in ((True, "abd_rel_deterministic"), (False, "abd_rel_parallel")):
            red = two_level_abd_reduce(raw, layout, width, det)
            outs.append(red)
            dense = SortedSymBlockCoo(red.rows, red.cols, red.values, n_dof).to_dense()
            rep[key] = max(rep[key], _rel(dense, ref))
        again = two_level_abd_reduce(raw, layout, width, True)
        rep["abd_reproducible"] &= np.array_equal(again.values, outs[0].values)
    return KernelReport(instances, lane=lane_example().tolist(), seconds=time.perf_counter() - t0, **rep)


# -- strain-limit eigensystem ------------------------------------------------

def strain_limit_eigen(samples=1000, seed=0):
    """Max |numerical - closed-form| eigenvalue gap and the smallest eigenvalue."""
    rng = np.random.default_rng(seed)
    F = rng.normal(size=(samples, 3, 2))
    F /= np.linalg.norm(F, axis=1, keepdims=True)
    F *= rng.uniform(1.01, 2.0, size=(samples, 1, 2))
    _, _, H = cubic_sl_F(F)
    num = np.linalg.eigvalsh(H.reshape(samples, 6, 6))
    I5 = np.einsum("nkc,nkc->nc", F, F)
    ana = np.sort(np.concatenate([np.stack(cubic_sl_eigenvalues(I5[:, c]), 1) for c in (0, 1)], 1), 1)
    return float(np.abs(num - ana).max()), float(num.min())


# -- finite-difference checks ------------------------------------------------

def _random_rotation(rng, n):
    Q, R = np.linalg.qr(rng.normal(size=(n, 3, 3)))
    Q *= np.sign(np.diagonal(R, axis1=1, axis2=2))[:, None, :]
    Q[np.linalg.det(Q) < 0, :, 0] *= -1
    return Q


def fd_check(fn, x, h):
    """Relative gradient and Hessian errors of a batched energy against central differences.

    ``fn(x, project=False)`` returns an ElementEnergy over ``x`` of shape (n, k, 3).
    """
    e = fn(x)
    n, k, _ = x.shape
    flat = x.reshape(n, -1)
    g_fd = np.zeros((n, 3 * k))
    H_fd = np.zeros((n, 3 * k, 3 * k))
    for i in range(3 * k):
        xp, xm = flat.copy(), flat.copy()
        xp[:, i] += h
        xm[:, i] -= h
        ep, em = fn(xp.reshape(x.shape)), fn(xm.reshape(x.shape))
        g_fd[:, i] = (ep.value - em.value) / (2 * h)
        H_fd[:, :, i] = (ep.gradient.reshape(n, -1) - em.gradient.reshape(n, -1)) / (2 * h)
    g = e.gradient.reshape(n, -1)

    def rel(a, b):
        nb = np.linalg.norm(b.reshape(n, -1), axis=1)
        floor = 1e-6 * nb.max(initial=0.0) + 1e-300
        return float((np.linalg.norm((a - b).reshape(n, -1), axis=1) / np.maximum(nb, floor)).max())

    return rel(g_fd, g), rel(H_fd, e.hessian)


def _energy_cases(rng, n):
    """(name, batched energy fn, positions, FD step) for every element energy."""
    cases = []
    # stable Neo-Hookean on perturbed unit tets
    rest = np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], float)
    Dm_inv = np.broadcast_to(np.eye(3), (n, 3, 3))
    F = _random_rotation(rng, n) @ (np.eye(3) + 0.3 * rng.normal(size=(n, 3, 3)))
    F[np.linalg.det(F) < 0.2] = np.eye(3) * 1.1
    x = np.einsum("nij,kj->nki", F, rest) + rng.normal(size=(n, 1, 3))
    Y, nu = rng.uniform(1e4, 1e6, n), rng.uniform(0.1, 0.45, n)
    cases.append(("neo-hookean", lambda x: stable_neo_hookean(x, Dm_inv, Y, nu, 1.0 / 6.0, project=False),
                  x, 1e-6))
    # membrane terms on triangles stretched past the strain limit
    tri_rest = np.array([[0, 0], [1, 0], [0, 1]], float)
    inv = np.broadcast_to(np.eye(2), (n, 2, 2))
    F2 = _random_rotation(rng, n)[:, :, :2] @ (np.diag([1.2, 1.15]) + 0.1 * rng.normal(size=(n, 2, 2)))
    xt = np.einsum("nij,kj->nki", F2, tri_rest)

    def memb(fn, k):
        return lambda x: fn(membrane_deformation(x, inv, 0.5), k, project=False)

    cases.append(("fbw-stretch", memb(fbw_membrane, 5e4), xt, 1e-6))
    cases.append(("fbw-shear", memb(shear_energy, 1.5e4), xt, 1e-6))
    cases.append(("cubic-sl", lambda x: cubic_sl(membrane_deformation(x, inv, 0.5), 5e6), xt, 1e-6))
    # hinges folded away from their rest angles
    q = np.array([[0, 0, 0], [1, 0, 0], [0.3, 1, 0], [0.6, -1, 0]], float)
    ang = rng.uniform(-1.2, 1.2, n)
    xh = np.repeat(q[None], n, 0)
    xh[:, 3, 1] = -np.cos(ang)
    xh[:, 3, 2] = np.sin(ang)
    xh = np.einsum("nij,nkj->nki", _random_rotation(rng, n), xh + 0.05 * rng.normal(size=xh.shape))
    theta0 = rng.uniform(-0.5, 0.5, n)
    cases.append(("hinge-bending", lambda x: hinge_bending(x, theta0, 0.7, 1.3, project=False), xh, 1e-6))
    # affine orthogonality near identity
    qa = np.concatenate([rng.normal(size=(n, 3)), (np.eye(3) + 0.2 * rng.normal(size=(n, 3, 3))).reshape(n, 9)], 1)
    cases.append(("abd-orthogonality",
                  lambda x: abd_orthogonality(x.reshape(n, 12), 1e5, 0.8, project=False), qa.reshape(n, 4, 3), 1e-6))
    # barrier on point-triangle, edge-edge and point-ground stencils inside dhat
    dhat = 0.1
    pt = rng.normal(size=(n, 4, 3))
    nrm = np.cross(pt[:, 2] - pt[:, 1], pt[:, 3] - pt[:, 1])
    nrm /= np.linalg.norm(nrm, axis=1, keepdims=True)
    w = rng.dirichlet([2, 2, 2], n)
    pt[:, 0] = np.einsum("nk,nkj->nj", w, pt[:, 1:]) + rng.uniform(0.02, 0.08, (n, 1)) * nrm
    cases.append(("barrier-pt", lambda x: barrier_pair(PT, x, dhat, 1e3, project=False), pt, 1e-7))
    a0, a1 = rng.normal(size=(n, 3)), rng.normal(size=(n, 3))
    da = a1 - a0
    off = np.cross(da, rng.normal(size=(n, 3)))
    off /= np.linalg.norm(off, axis=1, keepdims=True)
    mid = a0 + 0.5 * da + rng.uniform(0.02, 0.08, (n, 1)) * off
    other = np.cross(da, off)
    other /= np.linalg.norm(other, axis=1, keepdims=True)
    ee = np.stack([a0, a1, mid - 0.7 * other, mid + 0.9 * other], 1)
    cases.append(("barrier-ee", lambda x: barrier_pair(EE, x, dhat, 1e3, project=False), ee, 1e-7))
    pg = rng.normal(size=(n, 4, 3))
    pg[:, 0, 1] = rng.uniform(0.02, 0.08, n)
    cases.append(("barrier-ground", lambda x: barrier_pair(PG, x, dhat, 1e3, project=False), pg, 1e-7))
    return cases


def fd_checks(samples=24, seed=0):
    """{energy: (gradient rel. error, Hessian rel. error)} at random valid states."""
    rng = np.random.default_rng(seed)
    return {name: fd_check(fn, x, h) for name, fn, x, h in _energy_cases(rng, samples)}


# -- stretch study -----------------------------------------------------------

@dataclass
class StretchRow:
    stiffness: float
    max_stretch: float
    mean_stretch: float
    steps: int
    seconds: float


def stretch_study(stiffnesses=(5e6, 5e7, 5e8), steps=100, preconditioner=None):
    """Hang the cloth preset at each strain-limit stiffness; largest principal stretch per triangle."""
    from .solver import Simulator

    rows = []
    for k in stiffnesses:
        t0 = time.perf_counter()
        scene = presets.load(presets.CLOTH)
        for m in scene.meshes:
            m.material.strain_limit = float(k)
        sim = Simulator(scene, preconditioner)
        for _ in range(steps):
            sim.step()
        s = sim.system
        defm = membrane_deformation(sim.state.xS[s.tris], s.tri_inv, s.tri_aT)
        top = principal_stretches(defm.F)[:, 0]
        rows.append(StretchRow(float(k), float(top.max()), float(top.mean()), steps, time.perf_counter() - t0))
    return rows


# -- command-line reports ----------------------------------------------------

def _report_fd():
    res = fd_checks()
    lines, ok = [], True
    for name, (eg, eh) in res.items():
        good = eg <= 1e-4 and eh <= 1e-3
        ok &= good
        lines.append(f"{'PASS' if good else 'FAIL'} {name:18s} grad {eg:.2e}  hess {eh:.2e}")
    lines.append(f"max relative gradient error {max(v[0] for v in res.values()):.2e}")
    return ok, lines


def _report_kernels():
    r = kernel_oracles()
    eig, lo = strain_limit_eigen()
    checks = [
        ("fast_hash_reduction", r.hash_exact and r.hash_rel <= 1e-12,
         f"deterministic exact={r.hash_exact} parallel rel={r.hash_rel:.1e}"),
        ("fast_segment_reduction", r.segment_exact and r.segment_rel <= 1e-12,
         f"deterministic exact={r.segment_exact} parallel rel={r.segment_rel:.1e}"),
        ("srbk_spmv", r.spmv_exact and r.spmv_rel <= 1e-12,
         f"deterministic exact={r.spmv_exact} parallel rel={r.spmv_rel:.1e}"),
        ("two_level_abd_reduce",
         r.abd_reproducible and max(r.abd_rel_deterministic, r.abd_rel_parallel) <= 1e-10,
         f"rel deterministic={r.abd_rel_deterministic:.1e} parallel={r.abd_rel_parallel:.1e} "
         f"reproducible={r.abd_reproducible}"),
        ("lane example", r.lane == [3.0, 3.0, 2.0], f"segment sums {r.lane}"),
        ("strain-limit eigenvalues", eig <= 1e-8 and lo >= 0.0, f"max gap {eig:.1e}, min eigenvalue {lo:.2e}"),
    ]
    lines = [f"{'PASS' if ok else 'FAIL'} {name}: {msg}" for name, ok, msg in checks]
    lines.append(f"{r.instances} random instances in {r.seconds:.1f} s")
    return all(c[1] for c in checks), lines


def _report_fixture():
    res = mas_fixture()
    c, m = res["connectivity"], res["morton"]
    ok = c["levels"] == 2 and c["topSubdomains"] == 1 and m["levels"] == 3
    return ok, [f"levels={c['levels']}, topSubdomains={c['topSubdomains']}",
                f"morton-ordered: levels={m['levels']}, superNodes={m['superNodes']}",
                "PASS" if ok else "FAIL"]


def _report_stretch():
    rows = stretch_study()
    lines = ["stiffness      max     mean"]
    lines += [f"{r.stiffness:9.1e}  {r.max_stretch:.4f}  {r.mean_stretch:.4f}" for r in rows]
    lo, hi = rows[0], rows[-1]
    ok = (1.0 <= lo.max_stretch <= 1.5 and lo.mean_stretch <= 1.05 and hi.max_stretch <= 1.12
          and all(a.max_stretch >= b.max_stretch for a, b in zip(rows, rows[1:])))
    lines.append("PASS" if ok else "FAIL")
    return ok, lines


def run_suite(name):
    """Run one named suite; returns (passed, report lines)."""
    table = {"fd-checks": _report_fd, "kernel-oracles": _report_kernels, "mas-fixture": _report_fixture,
             "stretch-study": _report_stretch}
    if name not in table:
        raise KeyError(name)
    return table[name]()
