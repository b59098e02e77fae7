import numpy as np
import pytest
import scipy.sparse as sps
from hypothesis import given, strategies as st

from ipcsim.mas import (BlockJacobi, MasError, MasPreconditioner, adjacency_from_elements, apply,
                        assemble_preconditioner, bfs_chunks, build_hierarchy, hierarchy_summary, morton_order,
                        multilevel_partition, ordered_partition, partition_graph)
from ipcsim.mas.precond import dense_reference
from ipcsim.meshgen import box_tets
from ipcsim.solver import pcg_solve
from ipcsim.sparse import fast_hash_reduction, sort_and_canonicalize
from ipcsim.elastic import stable_neo_hookean
from ipcsim.solver.energy import stencil_stream
from ipcsim.sparse.triplets import BlockTripletStream, pack_keys
from ipcsim.verify import fixture_adjacency, mas_fixture


def random_graph(rng, n, p):
    A = sps.random(n, n, density=p, random_state=int(rng.integers(1 << 31)), format="coo")
    A = ((A + A.T) > 0).astype(float).tocsr()
    A.setdiag(0)
    A.eliminate_zeros()
    return A


def stiff_box(res=(8, 2, 2), youngs=1e8):
    """Hessian of a stretched stiff box plus mass: a small structured FEM system."""
    v, t = box_tets((res[0] * 0.1, res[1] * 0.1, res[2] * 0.1), res)
    rng = np.random.default_rng(0)
    x = v * np.array([1.05, 0.97, 1.0]) + 1e-3 * rng.normal(size=v.shape)
    Dm = np.stack([v[t[:, k]] - v[t[:, 0]] for k in (1, 2, 3)], 2)
    vol = np.abs(np.linalg.det(Dm)) / 6
    e = stable_neo_hookean(x[t], np.linalg.inv(Dm), youngs, 0.3, vol)
    n = len(v)
    mass = np.full(n, 1.0)
    idx = np.arange(n)
    s = BlockTripletStream.concat([stencil_stream(t, 1e-4 * e.hessian),
                                   BlockTripletStream(pack_keys(idx, idx), mass[:, None, None] * np.eye(3))])
    A = fast_hash_reduction(sort_and_canonicalize(s), n)
    return A, adjacency_from_elements(n, [t]), t


@given(st.integers(0, 10_000), st.integers(2, 120), st.sampled_from([4, 16, 32]))
def test_partition_is_padded_and_size_bounded(seed, n, N):
    rng = np.random.default_rng(seed)
    A = random_graph(rng, n, min(1.0, 4.0 / n))
    part = partition_graph(A, N=N)
    part.check()
    assert np.bincount(part.node_to_partition).max() <= N
    assert sorted(part.mapping[part.mapping >= 0]) == list(range(n))


def test_objects_smaller_than_subdomain_are_packed_whole():
    A = sps.csr_matrix((30, 30))
    groups = [np.arange(0, 5), np.arange(5, 12), np.arange(12, 30)]
    part = partition_graph(A, N=16, groups=groups)
    part.check()
    labels = part.node_to_partition
    assert len(set(labels[:5])) == 1 and len(set(labels[5:12])) == 1
    assert labels[0] == labels[5]  # 5 + 7 <= 16 share one subdomain
    assert part.small[labels[0]]
    assert not set(labels[12:]) & set(labels[:12])


def test_multilevel_partition_balances_a_grid():
    _, _, t = stiff_box((8, 4, 4))
    n = t.max() + 1
    A = adjacency_from_elements(n, [t])
    lab = multilevel_partition(A, 8, seed=0)
    sizes = np.bincount(lab)
    assert len(sizes) == 8 and sizes.max() <= 1.3 * n / 8


def test_bfs_chunks_sizes():
    A = random_graph(np.random.default_rng(2), 50, 0.1)
    lab = bfs_chunks(A, 16)
    assert np.bincount(lab).max() <= 16


def test_fixture_hierarchies():
    res = mas_fixture()
    assert res["connectivity"]["levels"] == 2 and res["connectivity"]["topSubdomains"] == 1
    assert res["morton"]["levels"] == 3
    assert fixture_adjacency().nnz == 2 * 17


def test_morton_order_is_spatially_coherent():
    pts = np.array([[0, 0, 0], [1, 1, 1], [0.01, 0, 0], [0.99, 1, 1]], float)
    order = morton_order(pts)
    pos = np.argsort(order)
    assert abs(pos[0] - pos[2]) == 1 and abs(pos[1] - pos[3]) == 1
    part = ordered_partition(order, 2)
    part.check()


def test_hierarchy_levels_nest():
    A, adj, _ = stiff_box()
    h = build_hierarchy(partition_graph(adj, N=16), adj, max_levels=4)
    for fine, coarse in zip(h.levels, h.levels[1:]):
        # nodes sharing a fine subdomain stay together on the coarse level
        for s in np.unique(fine.subdomain):
            assert len(np.unique(coarse.subdomain[fine.subdomain == s])) == 1
    assert hierarchy_summary(h)["levels"] == h.level_count


@pytest.mark.parametrize("det", [True, False])
def test_apply_matches_dense_reference(det):
    A, adj, _ = stiff_box((6, 2, 2))
    h = build_hierarchy(partition_graph(adj, N=16), adj)
    assemble_preconditioner(h, A, deterministic=det)
    v = np.random.default_rng(0).normal(size=3 * A.n_rows)
    M = dense_reference(h, A)
    np.testing.assert_allclose(apply(h, v), M @ v, rtol=1e-8, atol=1e-12 * np.abs(M @ v).max())
    np.testing.assert_allclose(M, M.T, atol=1e-10 * np.abs(M).max())
    assert np.linalg.eigvalsh(M).min() > 0


def test_stale_preconditioner_is_detected():
    A, adj, _ = stiff_box((4, 2, 2))
    P = MasPreconditioner(partition_graph(adj, N=16), debug=True)
    P.update(A, adj)
    P(np.ones(3 * A.n_rows))
    A.blocks[0] *= 2.0
    with pytest.raises(MasError):
        P(np.ones(3 * A.n_rows))


def test_mas_beats_block_jacobi_on_stiff_box():
    A, adj, _ = stiff_box((16, 3, 3))
    b = np.random.default_rng(1).normal(size=3 * A.n_rows)
    mas = MasPreconditioner(partition_graph(adj, N=16))
    mas.update(A, adj)
    bj = BlockJacobi()
    bj.update(A)
    r_mas = pcg_solve(A, b, mas, 1e-4)
    r_bj = pcg_solve(A, b, bj, 1e-4)
    assert r_mas.converged and r_bj.converged
    assert r_mas.residual <= 1e-4
    assert r_mas.iterations <= r_bj.iterations


def test_adjacency_from_elements():
    A = adjacency_from_elements(4, [np.array([[0, 1, 2]]), np.zeros((0, 2), int)])
    assert A.nnz == 6 and A[0, 3] == 0


def test_partition_count_and_padding():
    from ipcsim.mas import partition_count

    assert partition_count(100, 16, 1) == 7
    A = sps.csr_matrix((14, 14))
    part = partition_graph(A, N=16)
    assert part.count == 1 and np.array_equal(part.mapping[14:], [-1, -1])


def test_fixture_groups_connected_quadruples():
    A = fixture_adjacency()
    part = partition_graph(A, N=4)
    assert part.count == 4 and np.all(part.mapping >= 0)
    for m in range(4):
        nodes = part.mapping[4 * m:4 * m + 4]
        sub = A[nodes][:, nodes]
        from scipy.sparse.csgraph import connected_components

        assert connected_components(sub, directed=False)[0] == 1


def test_disconnected_nodes_stop_after_level_zero():
    A = sps.csr_matrix((40, 40))
    h = build_hierarchy(partition_graph(A, N=16), A)
    assert h.level_count == 1


def _identity_like(n, extra=()):
    r = list(range(n)) + [e[0] for e in extra]
    c = list(range(n)) + [e[1] for e in extra]
    B = [np.eye(3)] * n + [0.1 * np.ones((3, 3))] * len(extra)
    return fast_hash_reduction(sort_and_canonicalize(BlockTripletStream.from_triplets(r, c, np.array(B))), n)


def test_identity_matrix_gives_identity_inverses():
    A = _identity_like(10)
    adj = sps.csr_matrix((10, 10))
    h = build_hierarchy(partition_graph(adj, N=16), adj)
    inv = assemble_preconditioner(h, A)
    occ = np.repeat(h.levels[0].occupied()[0], 3)
    np.testing.assert_allclose(inv[0][0][np.ix_(occ, occ)], np.eye(30))
    assert not np.any(apply(h, np.zeros(30)))


def test_cross_subdomain_block_reaches_only_coarse_level():
    # two chains of four nodes, one coupling between nodes 3 and 4
    A = _identity_like(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (3, 4)])
    adj = sps.csr_matrix((np.ones(14), ([0, 1, 2, 4, 5, 6, 3, 1, 2, 3, 5, 6, 7, 4],
                                        [1, 2, 3, 5, 6, 7, 4, 0, 1, 2, 4, 5, 6, 3])), shape=(8, 8))
    part = ordered_partition(np.arange(8), 4)
    h = build_hierarchy(part, adj)
    assemble_preconditioner(h, A)
    lvl0 = h.levels[0]
    assert lvl0.subdomain[3] != lvl0.subdomain[4]
    # each level-0 subdomain only sees its own chain: inverting back gives the chain matrix
    chain = np.linalg.inv(h.inverses[0][0])
    np.testing.assert_allclose(chain, A.to_dense()[:12, :12], atol=1e-12)
    assert h.level_count == 2
    coarse = np.linalg.inv(h.inverses[1][0][:6, :6])
    np.testing.assert_allclose(coarse[:3, 3:], 0.1 * np.ones((3, 3)), atol=1e-12)


def test_single_subdomain_is_a_direct_solve():
    A, adj, _ = stiff_box((2, 1, 1))
    assert A.n_rows <= 16
    h = build_hierarchy(partition_graph(adj, N=16), adj)
    assert h.level_count == 1
    assemble_preconditioner(h, A)
    v = np.random.default_rng(3).normal(size=3 * A.n_rows)
    np.testing.assert_allclose(apply(h, v), np.linalg.solve(A.to_dense(), v), rtol=1e-10)


def test_preconditioner_is_positive():
    A, adj, _ = stiff_box((6, 2, 2))
    P = MasPreconditioner(partition_graph(adj, N=16))
    P.update(A, adj)
    V = np.random.default_rng(5).normal(size=(100, 3 * A.n_rows))
    assert all(v @ P(v) > 0 for v in V)
