"""Candidate pair culling with a k-d tree over primitive bounding boxes."""
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree


@dataclass
class SurfacePrimitives:
    """Contact surface in full-node indices.

    ``rigid`` holds the affine body id of every full node (-1 for FEM nodes);
    primitives that lie entirely on one affine body never collide with each other.
    """

    vertices: np.ndarray
    edges: np.ndarray
    triangles: np.ndarray
    rigid: np.ndarray

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, np.int64).reshape(-1)
        self.edges = np.asarray(self.edges, np.int64).reshape(-1, 2)
        self.triangles = np.asarray(self.triangles, np.int64).reshape(-1, 3)
        self.rigid = np.asarray(self.rigid, np.int64).reshape(-1)


def _boxes(x, prims, disp):
    pts = x[prims]
    lo, hi = pts.min(1), pts.max(1)
    if disp is not None:
        end = pts + disp[prims]
        lo, hi = np.minimum(lo, end.min(1)), np.maximum(hi, end.max(1))
    return lo, hi


def _overlap(loA, hiA, loB, hiB, i, j, inflation):
    return np.all((loA[i] <= hiB[j] + inflation) & (loB[j] <= hiA[i] + inflation), axis=1)


def _pairs(loA, hiA, loB, hiB, inflation, same):
    if len(loA) == 0 or len(loB) == 0:
        return np.zeros((0, 2), np.int64)
    cA, cB = 0.5 * (loA + hiA), 0.5 * (loB + hiB)
    rA = 0.5 * np.linalg.norm(hiA - loA, axis=1).max()
    rB = 0.5 * np.linalg.norm(hiB - loB, axis=1).max()
    radius = rA + rB + np.sqrt(3.0) * inflation
    tA = cKDTree(cA)
    if same:
        ij = tA.query_pairs(radius, output_type="ndarray")
    else:
        sdm = tA.sparse_distance_matrix(cKDTree(cB), radius, output_type="ndarray")
        ij = np.stack([sdm["i"], sdm["j"]], axis=1) if len(sdm) else np.zeros((0, 2), np.int64)
    ij = np.asarray(ij, np.int64).reshape(-1, 2)
    if len(ij) == 0:
        return ij
    keep = _overlap(loA, hiA, loB, hiB, ij[:, 0], ij[:, 1], inflation)
    return ij[keep]


def broad_phase(prims: SurfacePrimitives, x, inflation, displacement=None):
    """Point-triangle and edge-edge candidates as (n, 4) node stencils.

    Every pair whose (swept) boxes come within ``inflation`` is returned once.
    Pairs sharing a node or lying on a single affine body are excluded.
    """
    x = np.asarray(x, float)
    disp = None if displacement is None else np.asarray(displacement, float)
    V = prims.vertices[:, None]
    vlo, vhi = _boxes(x, V, disp)
    tlo, thi = _boxes(x, prims.triangles, disp)
    elo, ehi = _boxes(x, prims.edges, disp)

    vt = _pairs(vlo, vhi, tlo, thi, inflation, same=False)
    pt = np.concatenate([prims.vertices[vt[:, 0], None], prims.triangles[vt[:, 1]]], axis=1)
    pt = pt[(pt[:, 0] != pt[:, 1]) & (pt[:, 0] != pt[:, 2]) & (pt[:, 0] != pt[:, 3])]

    ee_ij = _pairs(elo, ehi, elo, ehi, inflation, same=True)
    ee = np.concatenate([prims.edges[ee_ij[:, 0]], prims.edges[ee_ij[:, 1]]], axis=1)
    shared = (ee[:, 0:1] == ee[:, 2:4]).any(1) | (ee[:, 1:2] == ee[:, 2:4]).any(1)
    ee = ee[~shared]

    pt = pt[~_one_body(prims.rigid, pt)]
    ee = ee[~_one_body(prims.rigid, ee)]
    return pt.reshape(-1, 4), ee.reshape(-1, 4)


def _one_body(rigid, st):
    if len(st) == 0:
        return np.zeros(0, bool)
    r = rigid[st]
    return (r[:, 0] >= 0) & np.all(r == r[:, :1], axis=1)


def ground_candidates(prims: SurfacePrimitives, x, height, inflation, displacement=None):
    """Surface vertices whose (swept) height comes within ``inflation`` of the plane."""
    y = x[prims.vertices, 1]
    if displacement is not None:
        y = np.minimum(y, y + displacement[prims.vertices, 1])
    return prims.vertices[y - height < inflation]


def brute_force_pairs(prims: SurfacePrimitives, x, inflation):
    """All-pairs box filter, used as a reference."""
    pt, ee = [], []
    for v in prims.vertices:
        for t in prims.triangles:
            if v in t:
                continue
            lo, hi = x[t].min(0), x[t].max(0)
            if np.all((x[v] <= hi + inflation) & (lo <= x[v] + inflation)):
                pt.append((v, *t))
    E = prims.edges
    for i in range(len(E)):
        for j in range(i + 1, len(E)):
            if set(E[i]) & set(E[j]):
                continue
            loA, hiA = x[E[i]].min(0), x[E[i]].max(0)
            loB, hiB = x[E[j]].min(0), x[E[j]].max(0)
            if np.all((loA <= hiB + inflation) & (loB <= hiA + inflation)):
                ee.append((*E[i], *E[j]))
    pt = np.array(pt, np.int64).reshape(-1, 4)
    ee = np.array(ee, np.int64).reshape(-1, 4)
    return pt[~_one_body(prims.rigid, pt)], ee[~_one_body(prims.rigid, ee)]
