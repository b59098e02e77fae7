from dataclasses import dataclass

import numpy as np

from .reduction import DEFAULT_WIDTH, _fold, fast_segment_reduction, segment_heads
from .triplets import pack_keys


@dataclass
class SortedSymBlockCoo:
    """Symmetric block matrix storing diagonal and upper blocks, sorted by (row, col)."""

    rows: np.ndarray
    cols: np.ndarray
    blocks: np.ndarray
    n_rows: int

    def __post_init__(self):
        self.rows = np.asarray(self.rows, np.int64)
        self.cols = np.asarray(self.cols, np.int64)
        self.blocks = np.asarray(self.blocks, float).reshape(-1, 3, 3)
        self.n_rows = int(self.n_rows)

    def __len__(self):
        return len(self.rows)

    @property
    def shape(self):
        return (3 * self.n_rows, 3 * self.n_rows)

    def check(self, tol=1e-12):
        keys = pack_keys(self.rows, self.cols)
        assert np.all(keys[1:] > keys[:-1]), "keys must be strictly increasing"
        assert np.all(self.rows <= self.cols), "only diagonal and upper blocks are stored"
        d = self.rows == self.cols
        D = self.blocks[d]
        scale = max(np.abs(D).max(initial=0.0), 1.0)
        assert np.all(np.abs(D - np.swapaxes(D, 1, 2)) <= tol * scale), "diagonal blocks must be symmetric"

    def diagonal_blocks(self):
        out = np.zeros((self.n_rows, 3, 3))
        d = self.rows == self.cols
        out[self.rows[d]] = self.blocks[d]
        return out

    def to_dense(self):
        A = np.zeros(self.shape)
        for r, c, b in zip(self.rows, self.cols, self.blocks):
            A[3 * r:3 * r + 3, 3 * c:3 * c + 3] += b
            if r != c:
                A[3 * c:3 * c + 3, 3 * r:3 * r + 3] += b.T
        return A

    def to_scipy(self):
        import scipy.sparse as sps

        off = self.rows != self.cols
        r = np.concatenate([self.rows, self.cols[off]])
        c = np.concatenate([self.cols, self.rows[off]])
        b = np.concatenate([self.blocks, np.swapaxes(self.blocks[off], 1, 2)])
        ii = (3 * r[:, None, None] + np.arange(3)[None, :, None]).repeat(3, 2)
        jj = (3 * c[:, None, None] + np.arange(3)[None, None, :]).repeat(3, 1)
        return sps.csr_matrix((b.ravel(), (ii.ravel(), jj.ravel())), shape=self.shape)

    def matvec(self, x, width=DEFAULT_WIDTH, deterministic=False):
        return srbk_spmv(self, x, width, deterministic)


class _SpmvPlan:
    """Matrix-only parts of the SpMV, computed once per matrix and width.

    Blocks are kept component-major, (3, 3, n), so every multiply-add runs
    over contiguous arrays.
    """

    def __init__(self, A, width):
        self.width = width
        off = A.rows != A.cols
        self.upper = np.ascontiguousarray(A.blocks.transpose(1, 2, 0))
        self.lower = np.ascontiguousarray(A.blocks[off].transpose(2, 1, 0))
        self.off_rows = A.rows[off]
        self.off_cols = A.cols[off]
        self.heads = segment_heads(A.rows, width)
        target = A.rows[self.heads]
        multi = np.zeros(len(target), bool)
        same = target[1:] == target[:-1]
        multi[1:] |= same
        multi[:-1] |= same
        self.target = target
        self.multi = multi
        # deterministic path: full-row order, lower blocks first, columns ascending
        dest = np.concatenate([A.rows, self.off_cols])
        order = np.argsort(pack_keys(dest, np.concatenate([A.cols, self.off_rows])), kind="stable")
        self.order = order
        self.dest = dest[order]


def _plan(A, width):
    plan = getattr(A, "_spmv_plan", None)
    if plan is None or plan.width != width:
        plan = _SpmvPlan(A, width)
        A._spmv_plan = plan
    return plan


def _block_products(B, xs):
    return B[:, 0] * xs[0] + B[:, 1] * xs[1] + B[:, 2] * xs[2]


def srbk_spmv(A: SortedSymBlockCoo, x, width=DEFAULT_WIDTH, deterministic=False):
    """y = A_full x from the upper-triangle storage.

    Row runs of the stored blocks are reduced by key; each strictly upper block
    also contributes its transpose to the column's output row.
    """
    x = np.asarray(x, float)
    if x.shape != (3 * A.n_rows,):
        raise ValueError(f"vector of length {3 * A.n_rows} expected, got {x.shape}")
    if len(A) == 0:
        return np.zeros_like(x)
    plan = _plan(A, width)
    XT = np.ascontiguousarray(x.reshape(-1, 3).T)
    upper = _block_products(plan.upper, np.take(XT, A.cols, axis=1))
    lower = _block_products(plan.lower, np.take(XT, plan.off_rows, axis=1))
    if deterministic:
        # one sequential fold per output row, visiting its blocks by ascending column
        vals = np.concatenate([upper, lower], axis=1)[:, plan.order]
        return fast_segment_reduction(plan.dest, vals.T, width, True, n_out=A.n_rows).reshape(-1)
    # same lane-group reduction as fast_segment_reduction, with the heads cached
    partial = np.add.reduceat(upper, plan.heads, axis=1)
    Y = np.zeros((3, A.n_rows))
    direct = ~plan.multi
    Y[:, plan.target[direct]] = partial[:, direct]
    if plan.multi.any():
        Y += _fold(plan.target[plan.multi], partial[:, plan.multi].T, A.n_rows).T
    for k in range(3):
        Y[k] += np.bincount(plan.off_cols, weights=lower[k], minlength=A.n_rows)
    return np.ascontiguousarray(Y.T).reshape(-1)


def dump_matrix(A: SortedSymBlockCoo, path):
    """Text triplets: blockRow blockCol followed by the 9 row-major values."""
    with open(path, "w") as fh:
        fh.write(f"# blocks {len(A)} rows {A.n_rows}\n")
        for r, c, b in zip(A.rows, A.cols, A.blocks):
            fh.write(f"{r} {c} " + " ".join(repr(float(v)) for v in b.ravel()) + "\n")


def load_matrix(path):
    with open(path) as fh:
        header = fh.readline().split()
        n_rows = int(header[4])
        data = np.loadtxt(fh, ndmin=2)
    if data.size == 0:
        return SortedSymBlockCoo(np.zeros(0), np.zeros(0), np.zeros((0, 3, 3)), n_rows)
    return SortedSymBlockCoo(data[:, 0].astype(np.int64), data[:, 1].astype(np.int64),
                             data[:, 2:].reshape(-1, 3, 3), n_rows)
