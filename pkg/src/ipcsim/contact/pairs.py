from dataclasses import dataclass

import numpy as np

from .barrier import barrier
from .broad_phase import SurfacePrimitives, broad_phase, ground_candidates
from .distance import EE, KIND_NAMES, PG, PT, pair_distance


@dataclass
class ContactPair:
    kind: str
    node_ids: tuple
    distance_sq: float
    barrier_value: float
    active: bool


@dataclass
class ContactSet:
    """Batched contact stencils. Unused stencil slots (point-ground) hold -1."""

    kind: np.ndarray
    nodes: np.ndarray
    distance_sq: np.ndarray

    def __len__(self):
        return len(self.kind)

    @classmethod
    def empty(cls):
        return cls(np.zeros(0, np.int64), np.zeros((0, 4), np.int64), np.zeros(0))

    def stencil(self, x):
        """(n, 4, 3) positions; -1 slots read node 0 and are never used."""
        return x[np.maximum(self.nodes, 0)]

    def select(self, mask):
        return ContactSet(self.kind[mask], self.nodes[mask], self.distance_sq[mask])

    def pairs(self, dhat, kappa):
        b, _, _ = barrier(self.distance_sq, dhat * dhat)
        for k, n, d2, bv in zip(self.kind, self.nodes, self.distance_sq, kappa * b):
            yield ContactPair(KIND_NAMES[int(k)], tuple(int(i) for i in n), float(d2), float(bv),
                              bool(d2 < dhat * dhat))

    @property
    def min_distance(self):
        return float(np.sqrt(self.distance_sq.min())) if len(self) else np.inf


def stencils(prims: SurfacePrimitives, x, inflation, ground=None, displacement=None):
    """Candidate stencils (kind, nodes) from the broad phase and the ground plane."""
    pt, ee = broad_phase(prims, x, inflation, displacement)
    kinds = [np.full(len(pt), PT), np.full(len(ee), EE)]
    nodes = [pt, ee]
    if ground is not None:
        g = ground_candidates(prims, x, ground, inflation, displacement)
        st = np.full((len(g), 4), -1, np.int64)
        st[:, 0] = g
        kinds.append(np.full(len(g), PG))
        nodes.append(st)
    return np.concatenate(kinds).astype(np.int64), np.concatenate(nodes).reshape(-1, 4).astype(np.int64)


def find_contacts(prims: SurfacePrimitives, x, dhat, ground=None):
    """Active contacts: stencils with distance below dhat."""
    kind, nodes = stencils(prims, x, dhat, ground)
    if len(kind) == 0:
        return ContactSet.empty()
    d2 = pair_distance(kind, x[np.maximum(nodes, 0)], False, 0.0 if ground is None else ground)[0]
    act = d2 < dhat * dhat
    return ContactSet(kind[act], nodes[act], d2[act])
