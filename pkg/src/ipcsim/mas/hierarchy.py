"""Coarse levels: connected nodes inside a subdomain merge into super nodes."""
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sps
from scipy.sparse.csgraph import connected_components

from .partition import PartitionResult


@dataclass
class MasLevel:
    """Node -> slot map of one level; slot // N is the subdomain, slot % N the local index."""

    slot: np.ndarray
    n_slots: int
    size: int

    @property
    def n_subdomains(self):
        return -(-self.n_slots // self.size)

    @property
    def subdomain(self):
        return self.slot // self.size

    def occupied(self):
        occ = np.zeros(self.n_subdomains * self.size, bool)
        occ[self.slot] = True
        return occ.reshape(self.n_subdomains, self.size)


@dataclass
class MasHierarchy:
    partition: PartitionResult
    levels: list = field(default_factory=list)
    inverses: list = field(default_factory=list)  # per level (S, 3N, 3N)
    stamp: tuple | None = None  # fingerprint of the assembled matrix

    @property
    def level_count(self):
        return len(self.levels)

    @property
    def size(self):
        return self.partition.size

    def super_node_maps(self):
        return [lvl.slot.copy() for lvl in self.levels]

    def dump(self, path):
        """Per-level node -> (super node slot, subdomain) table as text."""
        with open(path, "w") as fh:
            fh.write(f"# levels {self.level_count} N {self.size}\n")
            for l, lvl in enumerate(self.levels):
                fh.write(f"level {l} subdomains {lvl.n_subdomains}\n")
                fh.write(" ".join(str(int(s)) for s in lvl.slot) + "\n")


def _coarse_edges(adj, slot):
    coo = adj.tocoo()
    r, c = slot[coo.row], slot[coo.col]
    keep = r != c
    return r[keep], c[keep]


def _next_level(adj, level: MasLevel):
    """Merge connected super nodes within each subdomain; None if nothing merges."""
    N = level.size
    r, c = _coarse_edges(adj, level.slot)
    same = (r // N) == (c // N)
    n = level.n_slots
    G = sps.coo_matrix((np.ones(int(same.sum())), (r[same], c[same])), shape=(n, n))
    used = np.zeros(n, bool)
    used[level.slot] = True
    _, comp = connected_components(G, directed=False)
    # components are renumbered by their lowest member slot
    live = np.nonzero(used)[0]
    labels = comp[live]
    first = np.full(comp.max() + 1, n, np.int64)
    np.minimum.at(first, labels, live)
    uniq = np.unique(labels)
    if len(uniq) == len(live):
        return None
    order = np.argsort(first[uniq], kind="stable")
    rank = np.empty(comp.max() + 1, np.int64)
    rank[uniq[order]] = np.arange(len(uniq))
    new_slot = rank[comp[level.slot]]
    return MasLevel(new_slot, len(uniq), N)


def build_hierarchy(partition: PartitionResult, adjacency, max_levels=4):
    """Level 0 from the padded partition, then aggregate until a stop rule fires.

    Stops at ``max_levels`` levels, when no merge happens, or once a level has a
    single subdomain. ``adjacency`` should include current contact couplings.
    """
    adj = sps.csr_matrix(adjacency)
    N = partition.size
    levels = [MasLevel(partition.remap.copy(), N * partition.count, N)]
    while len(levels) < max_levels and levels[-1].n_subdomains > 1:
        nxt = _next_level(adj, levels[-1])
        if nxt is None:
            break
        levels.append(nxt)
    return MasHierarchy(partition, levels)


def hierarchy_summary(h: MasHierarchy):
    return {"levels": h.level_count, "topSubdomains": h.levels[-1].n_subdomains,
            "superNodes": [int(len(np.unique(l.slot))) for l in h.levels]}
