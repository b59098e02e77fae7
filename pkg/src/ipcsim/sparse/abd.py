"""Two-level reduction of contact Hessian blocks onto mixed FEM/affine DOFs."""
from dataclasses import dataclass

import numpy as np

from ..scene import abd_jacobian
from .reduction import DEFAULT_WIDTH, reduce_stream
from .triplets import BlockTripletStream, pack_keys, sort_and_canonicalize, tile_blocks


@dataclass
class NodeLayout:
    """Where each contact node lives in the global block-DOF vector.

    body[i] == -1 marks an FEM node whose DOF block is dof[i]. Otherwise the
    node belongs to that affine body, dof[i] is the body's first of four
    blocks and rest[i] its rest offset (NaN if no Jacobian is known).
    """

    body: np.ndarray
    dof: np.ndarray
    rest: np.ndarray

    def __post_init__(self):
        self.body = np.asarray(self.body, np.int64)
        self.dof = np.asarray(self.dof, np.int64)
        self.rest = np.asarray(self.rest, float).reshape(-1, 3)

    @classmethod
    def fem(cls, n):
        return cls(np.full(n, -1), np.arange(n), np.full((n, 3), np.nan))

    def jacobians(self, nodes):
        rest = self.rest[nodes]
        if np.any(~np.isfinite(rest)):
            bad = nodes[np.nonzero(~np.isfinite(rest).all(1))[0][0]]
            raise ValueError(f"affine node {bad} has no Jacobian")
        return abd_jacobian(rest)


def _emit(rows, cols, tiles, out):
    if len(tiles):
        out.append(BlockTripletStream(pack_keys(rows, cols), tiles))


_UPPER = np.array([(i, j) for i in range(4) for j in range(4) if i <= j])


def map_node_pairs(r, c, C, layout: NodeLayout):
    """Map reduced node-pair blocks (symmetric stream semantics) to DOF tiles."""
    out = []
    br, bc = layout.body[r], layout.body[c]
    ar, ac = br >= 0, bc >= 0
    # FEM-FEM passes through
    m = ~ar & ~ac
    _emit(layout.dof[r[m]], layout.dof[c[m]], C[m], out)
    # affine-FEM: J_r^T C, four tiles down the body's rows
    m = ar & ~ac
    if np.any(m):
        J = layout.jacobians(r[m])
        X = np.einsum("nki,nkl->nil", J, C[m])
        out.append(_tiled(X, layout.dof[r[m]], layout.dof[c[m]]))
    m = ~ar & ac
    if np.any(m):
        J = layout.jacobians(c[m])
        X = np.einsum("nkl,nlj->nkj", C[m], J)
        out.append(_tiled(X, layout.dof[r[m]], layout.dof[c[m]]))
    # affine-affine
    m = ar & ac
    if np.any(m):
        Jr = layout.jacobians(r[m])
        Jc = layout.jacobians(c[m])
        X = np.einsum("nki,nkl,nlj->nij", Jr, C[m], Jc)
        same = br[m] == bc[m]
        Dr, Dc = layout.dof[r[m]], layout.dof[c[m]]
        d = ~same
        if np.any(d):
            out.append(_tiled(X[d], Dr[d], Dc[d]))
        if np.any(same):
            # both halves of the symmetric pair land in one 12x12 block
            Xs = X[same]
            offd = (r[m] != c[m])[same]
            Xs = np.where(offd[:, None, None], Xs + np.swapaxes(Xs, 1, 2), Xs)
            T = Xs.reshape(-1, 4, 3, 4, 3).transpose(0, 1, 3, 2, 4)
            tiles = T[:, _UPPER[:, 0], _UPPER[:, 1]].reshape(-1, 3, 3)
            base = Dr[same][:, None]
            _emit((base + _UPPER[:, 0]).ravel(), (base + _UPPER[:, 1]).ravel(), tiles, out)
    return BlockTripletStream.concat(out)


def _tiled(X, row0, col0):
    rows, cols, tiles = tile_blocks(X, row0, col0)
    return BlockTripletStream(pack_keys(rows, cols), tiles)


def two_level_abd_reduce(stream: BlockTripletStream, layout: NodeLayout,
                         width=DEFAULT_WIDTH, deterministic=False):
    """Reduce node-pair blocks, map each unique pair once, then reduce per DOF pair.

    Returns a sorted, canonical stream with unique keys over DOF blocks.
    """
    level1 = reduce_stream(sort_and_canonicalize(stream), width, deterministic)
    mapped = map_node_pairs(level1.rows, level1.cols, level1.values, layout)
    return reduce_stream(sort_and_canonicalize(mapped), width, deterministic)
