"""Assembly, inversion and application of the additive Schwarz preconditioner."""
import logging

import numpy as np

from ..sparse.bcoo import SortedSymBlockCoo
from ..sparse.reduction import DEFAULT_WIDTH, fast_segment_reduction, run_length_map
from .hierarchy import MasHierarchy, build_hierarchy
from .partition import PartitionResult

log = logging.getLogger(__name__)


class MasError(RuntimeError):
    pass


def _fingerprint(A: SortedSymBlockCoo):
    return (len(A), A.n_rows, float(A.blocks.sum()), float(np.abs(A.blocks).sum()))


def _full_stream(A, mask):
    """Stored blocks under ``mask`` plus the mirrored transposes of off-diagonal ones."""
    r, c, B = A.rows[mask], A.cols[mask], A.blocks[mask]
    off = r != c
    return (np.concatenate([r, c[off]]), np.concatenate([c, r[off]]),
            np.concatenate([B, np.swapaxes(B[off], 1, 2)]))


def _level_matrices(level, rows, cols, blocks, width, deterministic, reduce):
    N = level.size
    S = level.n_subdomains
    D = np.zeros((S, N, N, 3, 3))
    sr, sc = level.slot[rows], level.slot[cols]
    same = sr // N == sc // N
    sub, lr, lc = sr[same] // N, sr[same] % N, sc[same] % N
    key = (sub * N + lr) * N + lc
    B = blocks[same]
    if reduce:
        order = np.argsort(key, kind="stable")
        uk, O = run_length_map(key[order])
        sums = fast_segment_reduction(O, B[order], width, deterministic, n_out=len(uk))
        D.reshape(-1, 3, 3)[uk] = sums
    else:
        # level-0 keys are unique: direct writes
        D.reshape(-1, 3, 3)[key] = B
    return D.transpose(0, 1, 3, 2, 4).reshape(S, 3 * N, 3 * N)


def _invert(D, occupied):
    S, n3, _ = D.shape
    pad = np.repeat(~occupied, 3, axis=1)
    D = D.copy()
    D[pad[:, :, None] | pad[:, None, :]] = 0.0
    idx = np.arange(n3)
    D[:, idx, idx] += pad
    try:
        inv = np.linalg.inv(D)
        bad = ~np.isfinite(inv).all(axis=(1, 2))
    except np.linalg.LinAlgError:
        inv = np.empty_like(D)
        bad = np.zeros(S, bool)
        for s in range(S):
            try:
                inv[s] = np.linalg.inv(D[s])
            except np.linalg.LinAlgError:
                bad[s] = True
    for s in np.nonzero(bad)[0]:
        occ = ~pad[s]
        eps = 1e-8 * np.trace(D[s][np.ix_(occ, occ)]) / max(occ.sum(), 1)
        try:
            inv[s] = np.linalg.inv(D[s] + eps * np.diag(occ.astype(float)))
        except np.linalg.LinAlgError:
            raise MasError(f"subdomain {s} is singular") from None
        log.warning("subdomain %d regularized with %.3g I", s, eps)
    inv[pad[:, :, None] | pad[:, None, :]] = 0.0
    return inv


def assemble_preconditioner(h: MasHierarchy, A: SortedSymBlockCoo, width=DEFAULT_WIDTH,
                            deterministic=False):
    """Fill and invert every level's subdomain matrices from the stored blocks of A."""
    lvl0 = h.levels[0]
    N = h.size
    in0 = (lvl0.slot[A.rows] // N) == (lvl0.slot[A.cols] // N)
    # pass 1: blocks inside one level-0 subdomain go straight into level 0;
    # the others are only ever seen by coarser levels
    r0, c0, b0 = _full_stream(A, in0)
    rx, cx, bx = _full_stream(A, ~in0)
    inverses = [_invert(_level_matrices(lvl0, r0, c0, b0, width, deterministic, False), lvl0.occupied())]
    # pass 2: level-0 blocks reduced by coarse super-node pair, added with the rest
    rows, cols, blocks = np.concatenate([r0, rx]), np.concatenate([c0, cx]), np.concatenate([b0, bx])
    for level in h.levels[1:]:
        D = _level_matrices(level, rows, cols, blocks, width, deterministic, True)
        inverses.append(_invert(D, level.occupied()))
    h.inverses = inverses
    h.stamp = _fingerprint(A)
    return inverses


def apply(h: MasHierarchy, v, A=None):
    """z = sum over levels of P_l^T D_l^{-1} P_l v.

    Passing ``A`` checks that the preconditioner was assembled from it.
    """
    if A is not None and h.stamp != _fingerprint(A):
        raise MasError("preconditioner is stale: assembled for a different matrix")
    V = np.asarray(v, float).reshape(-1, 3)
    Z = np.zeros_like(V)
    for level, inv in zip(h.levels, h.inverses):
        S, N = level.n_subdomains, level.size
        gathered = np.zeros((S * N, 3))
        for k in range(3):
            gathered[:, k] = np.bincount(level.slot, weights=V[:, k], minlength=S * N)
        out = np.einsum("sij,sj->si", inv, gathered.reshape(S, 3 * N)).reshape(S * N, 3)
        Z += out[level.slot]
    return Z.reshape(-1)


class MasPreconditioner:
    """Holds a fixed level-0 partition; coarse levels follow the current couplings."""

    name = "cemas"

    def __init__(self, partition: PartitionResult, max_levels=4, width=DEFAULT_WIDTH, deterministic=False,
                 debug=False):
        self.partition = partition
        self.max_levels = max_levels
        self.width = width
        self.deterministic = deterministic
        self.debug = debug
        self.hierarchy = None
        self._A = None

    def update(self, A: SortedSymBlockCoo, adjacency):
        self.hierarchy = build_hierarchy(self.partition, adjacency, self.max_levels)
        assemble_preconditioner(self.hierarchy, A, self.width, self.deterministic)
        self._A = A

    def __call__(self, v):
        return apply(self.hierarchy, v, self._A if self.debug else None)


class BlockJacobi:
    name = "blockJacobi"

    def __init__(self):
        self.inv = None

    def update(self, A: SortedSymBlockCoo, adjacency=None):
        D = A.diagonal_blocks()
        try:
            self.inv = np.linalg.inv(D)
        except np.linalg.LinAlgError:
            eps = 1e-8 * np.trace(D, axis1=1, axis2=2)[:, None, None] / 3.0 + 1e-300
            self.inv = np.linalg.inv(D + eps * np.eye(3))

    def __call__(self, v):
        return np.einsum("nij,nj->ni", self.inv, np.asarray(v).reshape(-1, 3)).reshape(-1)


def dense_reference(h: MasHierarchy, A: SortedSymBlockCoo):
    """Dense sum_l P_l^T D_l^{-1} P_l built from explicit restriction matrices."""
    Ad = A.to_dense()
    n = A.n_rows
    M = np.zeros_like(Ad)
    for level in h.levels:
        N = level.size
        for s in range(level.n_subdomains):
            slots = [k for k in range(s * N, (s + 1) * N) if np.any(level.slot == k)]
            P = np.zeros((3 * len(slots), 3 * n))
            for a, k in enumerate(slots):
                for i in np.nonzero(level.slot == k)[0]:
                    P[3 * a:3 * a + 3, 3 * i:3 * i + 3] = np.eye(3)
            M += P.T @ np.linalg.inv(P @ Ad @ P.T) @ P
    return M
