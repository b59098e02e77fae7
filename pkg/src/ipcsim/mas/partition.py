"""Level-0 subdomains: size-bounded graph partitions padded to fixed-size slots."""
import heapq
import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sps
from scipy.sparse.csgraph import breadth_first_order

log = logging.getLogger(__name__)


@dataclass
class PartitionResult:
    node_to_partition: np.ndarray
    count: int  # M
    slack: int  # N_o
    mapping: np.ndarray  # length N*M, node id or -1
    remap: np.ndarray  # node id -> slot
    size: int  # N
    small: np.ndarray | None = None  # partitions packed from objects smaller than N

    def check(self):
        N = self.size
        assert len(self.mapping) == N * self.count
        sizes = np.bincount(self.node_to_partition, minlength=self.count)
        assert sizes.max(initial=0) <= N
        occ = self.mapping >= 0
        assert np.array_equal(self.remap[self.mapping[occ]], np.nonzero(occ)[0])
        for m in range(self.count):
            seg = self.mapping[m * N:(m + 1) * N]
            k = sizes[m]
            assert np.all(seg[:k] >= 0) and np.all(seg[k:] == -1)
            assert np.all(self.node_to_partition[seg[:k]] == m)


def partition_count(V, N, slack):
    return math.ceil(V / (N - slack))


def adjacency_from_elements(n, elements):
    """Symmetric node graph with unit weights per element edge."""
    rows, cols = [], []
    for el in elements:
        el = np.asarray(el, np.int64)
        if el.size == 0:
            continue
        k = el.shape[1]
        for a in range(k):
            for b in range(a + 1, k):
                rows.append(el[:, a])
                cols.append(el[:, b])
    if not rows:
        return sps.csr_matrix((n, n))
    r, c = np.concatenate(rows), np.concatenate(cols)
    A = sps.coo_matrix((np.ones(len(r)), (r, c)), shape=(n, n))
    A = (A + A.T).tocsr()
    A.setdiag(0)
    A.eliminate_zeros()
    A.data[:] = 1.0
    return A


# ---------------------------------------------------------------------------
# multilevel recursive bisection


def _heavy_edge_matching(A, vw, rng):
    n = A.shape[0]
    match = np.full(n, -1)
    indptr, indices, data = A.indptr, A.indices, A.data
    for v in rng.permutation(n):
        if match[v] >= 0:
            continue
        best, bw = v, -1.0
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            if match[u] < 0 and u != v and data[p] > bw:
                best, bw = u, data[p]
        match[v] = best
        match[best] = v
    cmap = np.full(n, -1)
    nc = 0
    for v in range(n):
        if cmap[v] < 0:
            cmap[v] = nc
            cmap[match[v]] = nc
            nc += 1
    return cmap, nc


def _coarsen(A, vw, cmap, nc):
    P = sps.csr_matrix((np.ones(len(cmap)), (np.arange(len(cmap)), cmap)), shape=(len(cmap), nc))
    Ac = (P.T @ A @ P).tocsr()
    Ac.setdiag(0)
    Ac.eliminate_zeros()
    return Ac, np.bincount(cmap, weights=vw, minlength=nc)


def _cut(A, side):
    coo = A.tocoo()
    return 0.5 * coo.data[side[coo.row] != side[coo.col]].sum()


def _grow(A, vw, target, start):
    """Greedy graph growing of part 0 from ``start`` until it holds ``target`` weight."""
    n = A.shape[0]
    side = np.ones(n, np.int8)
    weight = 0.0
    gain = np.zeros(n)
    heap = [(0.0, start)]
    seen = np.zeros(n, bool)
    seen[start] = True
    indptr, indices, data = A.indptr, A.indices, A.data
    while heap and weight + 0.5 * vw[heap[0][1]] < target:
        _, v = heapq.heappop(heap)
        if side[v] == 0:
            continue
        side[v] = 0
        weight += vw[v]
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            if side[u] == 1:
                gain[u] += data[p]
                seen[u] = True
                heapq.heappush(heap, (-gain[u], u))
        if not heap and weight < target:
            rest = np.nonzero(side == 1)[0]
            if len(rest):
                heapq.heappush(heap, (0.0, rest[0]))
    return side


def _fm_refine(A, vw, side, lo, hi, passes=4):
    """Boundary Fiduccia-Mattheyses passes keeping part-0 weight within [lo, hi]."""
    n = A.shape[0]
    indptr, indices, data = A.indptr, A.indices, A.data
    for _ in range(passes):
        ext = np.zeros(n)
        coo = A.tocoo()
        diff = side[coo.row] != side[coo.col]
        np.add.at(ext, coo.row, np.where(diff, coo.data, -coo.data))
        w0 = vw[side == 0].sum()
        locked = np.zeros(n, bool)
        heap = [(-ext[v], int(v)) for v in range(n) if ext[v] > -np.inf]
        heapq.heapify(heap)
        moves, best_gain, total, best_k = [], 0.0, 0.0, 0
        while heap:
            g, v = heapq.heappop(heap)
            if locked[v] or -g != ext[v]:
                continue
            nw = w0 - vw[v] if side[v] == 0 else w0 + vw[v]
            if not lo <= nw <= hi:
                continue
            locked[v] = True
            total += ext[v]
            w0 = nw
            side[v] ^= 1
            moves.append(v)
            for p in range(indptr[v], indptr[v + 1]):
                u = indices[p]
                if locked[u]:
                    continue
                ext[u] += 2 * data[p] if side[u] != side[v] else -2 * data[p]
                heapq.heappush(heap, (-ext[u], int(u)))
            ext[v] = -ext[v]
            if total > best_gain + 1e-12:
                best_gain, best_k = total, len(moves)
            if len(moves) - best_k > 50:
                break
        for v in moves[best_k:]:
            side[v] ^= 1
        if best_k == 0:
            break
    return side


def _bisect(A, vw, frac, rng, coarse_size=40):
    """Split into part 0 holding ``frac`` of the weight and part 1."""
    graphs = [(A, vw)]
    maps = []
    while graphs[-1][0].shape[0] > coarse_size:
        Ag, wg = graphs[-1]
        cmap, nc = _heavy_edge_matching(Ag, wg, rng)
        if nc > 0.9 * Ag.shape[0]:
            break
        maps.append(cmap)
        graphs.append(_coarsen(Ag, wg, cmap, nc))
    Ac, wc = graphs[-1]
    W = wc.sum()
    target = frac * W
    tol = max(wc.max(), 0.03 * W)
    best, best_cut = None, np.inf
    starts = rng.choice(Ac.shape[0], size=min(6, Ac.shape[0]), replace=False)
    for s in starts:
        side = _grow(Ac, wc, target, s)
        side = _fm_refine(Ac, wc, side, target - tol, target + tol)
        cut = _cut(Ac, side)
        if cut < best_cut:
            best, best_cut = side, cut
    side = best
    for lvl in range(len(maps) - 1, -1, -1):
        side = side[maps[lvl]].copy()
        Ag, wg = graphs[lvl]
        W = wg.sum()
        tol = max(wg.max(), 0.03 * W) if lvl else max(1.0, 0.03 * W)
        side = _fm_refine(Ag, wg, side, frac * W - tol, frac * W + tol)
    return _rebalance(A, vw, side, round(frac * vw.sum()))


def _rebalance(A, vw, side, target):
    """Move boundary vertices off the heavy side until part 0 weighs ``target``."""
    w0 = vw[side == 0].sum()
    while abs(w0 - target) >= 0.5:
        src = 0 if w0 > target else 1
        other = (side != src).astype(float)
        gain = A @ other - A @ (1.0 - other)
        gain[side != src] = -np.inf
        v = int(np.argmax(gain))
        side[v] ^= 1
        w0 += -vw[v] if src == 0 else vw[v]
    return side


def multilevel_partition(A, k, seed=0):
    """Recursive multilevel bisection of graph A into k parts; returns labels."""
    n = A.shape[0]
    labels = np.zeros(n, np.int64)
    rng = np.random.default_rng(seed)
    stack = [(np.arange(n), k, 0)]
    while stack:
        nodes, kk, base = stack.pop()
        if kk <= 1 or len(nodes) <= 1:
            labels[nodes] = base
            continue
        k0 = kk // 2
        sub = A[nodes][:, nodes].tocsr()
        side = _bisect(sub, np.ones(len(nodes)), k0 / kk, rng)
        stack.append((nodes[side == 0], k0, base))
        stack.append((nodes[side == 1], kk - k0, base + k0))
    return labels


def bfs_chunks(A, N):
    """Fallback: chunks of N nodes in breadth-first order (per connected piece)."""
    n = A.shape[0]
    seen = np.zeros(n, bool)
    order = []
    for s in range(n):
        if seen[s]:
            continue
        comp = breadth_first_order(A, s, directed=False, return_predecessors=False)
        seen[comp] = True
        order.append(comp)
    order = np.concatenate(order)
    labels = np.empty(n, np.int64)
    labels[order] = np.arange(n) // N
    return labels


# ---------------------------------------------------------------------------


def _build(labels_per_group, N, slack):
    parts = []
    for nodes, labels in labels_per_group:
        for lab in np.unique(labels):
            parts.append(np.sort(nodes[labels == lab]))
    parts.sort(key=lambda p: p[0])
    n = sum(len(p) for p in parts)
    M = len(parts)
    mapping = np.full(N * M, -1, np.int64)
    node_to_part = np.empty(n, np.int64)
    for m, p in enumerate(parts):
        mapping[m * N:m * N + len(p)] = p
        node_to_part[p] = m
    remap = np.empty(n, np.int64)
    occ = np.nonzero(mapping >= 0)[0]
    remap[mapping[occ]] = occ
    return PartitionResult(node_to_part, M, slack, mapping, remap, N)


def partition_graph(adjacency, V=None, N=16, groups=None, partitioner=None):
    """Size-bounded padded partition of the node graph.

    ``groups`` lists the node ids of each object; objects never share a
    partition unless they have fewer than N nodes, in which case they are
    packed together. ``partitioner(A, k) -> labels`` may replace the built-in
    multilevel bisection.
    """
    A = sps.csr_matrix(adjacency)
    V = A.shape[0] if V is None else V
    if groups is None:
        groups = [np.arange(V)]
    partitioner = partitioner or multilevel_partition
    pieces = []
    slack_used = 0
    small = []
    for nodes in groups:
        nodes = np.asarray(nodes, np.int64)
        if len(nodes) < N:
            small.append(nodes)
            continue
        sub = A[nodes][:, nodes].tocsr()
        labels = None
        for slack in range(N):
            M = partition_count(len(nodes), N, slack)
            lab = np.asarray(partitioner(sub, M))
            if np.bincount(lab).max() <= N:
                labels = lab
                slack_used = max(slack_used, slack)
                break
        if labels is None:
            log.warning("partitioner could not meet the size bound; using breadth-first chunks")
            labels = bfs_chunks(sub, N)
        pieces.append((nodes, labels))
    # pack small objects first-fit, keeping each object whole
    bins, fill = [], []
    for nodes in small:
        for b in range(len(bins)):
            if fill[b] + len(nodes) <= N:
                bins[b].append(nodes)
                fill[b] += len(nodes)
                break
        else:
            bins.append([nodes])
            fill.append(len(nodes))
    for b in bins:
        nodes = np.concatenate(b)
        pieces.append((nodes, np.zeros(len(nodes), np.int64)))
    res = _build(pieces, N, slack_used)
    res.small = np.zeros(res.count, bool)
    for b in bins:
        res.small[res.node_to_partition[b[0][0]]] = True
    return res


def ordered_partition(order, N):
    """Consecutive chunks of N nodes along a given ordering (no padding)."""
    order = np.asarray(order, np.int64)
    labels = np.empty(len(order), np.int64)
    labels[order] = np.arange(len(order)) // N
    M = (len(order) + N - 1) // N
    mapping = np.full(N * M, -1, np.int64)
    mapping[:len(order)] = order
    remap = np.empty(len(order), np.int64)
    remap[order] = np.arange(len(order))
    return PartitionResult(labels, M, 0, mapping, remap, N, np.zeros(M, bool))


def morton_order(points, bits=10):
    """Indices sorting points along a 3D Z-order curve."""
    p = np.asarray(points, float)
    lo, hi = p.min(0), p.max(0)
    q = ((p - lo) / np.maximum((hi - lo).max(), 1e-300) * ((1 << bits) - 1)).astype(np.uint64)
    code = np.zeros(len(p), np.uint64)
    for b in range(bits):
        for axis in range(3):
            code |= ((q[:, axis] >> np.uint64(b)) & np.uint64(1)) << np.uint64(3 * b + (2 - axis))
    return np.argsort(code, kind="stable")
