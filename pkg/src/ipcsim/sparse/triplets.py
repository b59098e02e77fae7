"""64-bit keyed streams of 3x3 blocks."""
from dataclasses import dataclass

import numpy as np

LOW32 = np.uint64(0xFFFFFFFF)
SHIFT = np.uint64(32)


def pack_keys(rows, cols):
    """Row index in the high 32 bits, column index in the low 32 bits."""
    return (np.asarray(rows).astype(np.uint64) << SHIFT) | np.asarray(cols).astype(np.uint64)


def unpack_keys(keys):
    keys = np.asarray(keys, dtype=np.uint64)
    return (keys >> SHIFT).astype(np.int64), (keys & LOW32).astype(np.int64)


@dataclass
class BlockTripletStream:
    keys: np.ndarray  # uint64
    values: np.ndarray  # (n, 3, 3)

    def __post_init__(self):
        self.keys = np.asarray(self.keys, dtype=np.uint64).reshape(-1)
        self.values = np.asarray(self.values, dtype=float).reshape(-1, 3, 3)
        if len(self.keys) != len(self.values):
            raise ValueError("keys and values differ in length")

    @classmethod
    def from_triplets(cls, rows, cols, values):
        return cls(pack_keys(rows, cols), values)

    @classmethod
    def empty(cls):
        return cls(np.zeros(0, np.uint64), np.zeros((0, 3, 3)))

    @classmethod
    def concat(cls, streams):
        streams = [s for s in streams if len(s)]
        if not streams:
            return cls.empty()
        return cls(np.concatenate([s.keys for s in streams]), np.concatenate([s.values for s in streams]))

    def __len__(self):
        return len(self.keys)

    @property
    def rows(self):
        return unpack_keys(self.keys)[0]

    @property
    def cols(self):
        return unpack_keys(self.keys)[1]


def sort_and_canonicalize(stream: BlockTripletStream) -> BlockTripletStream:
    """Move every block to the upper triangle (transposing it) and stably sort by key."""
    r, c = unpack_keys(stream.keys)
    vals = stream.values
    swap = r > c
    if np.any(swap):
        r, c = np.where(swap, c, r), np.where(swap, r, c)
        vals = vals.copy()
        vals[swap] = np.swapaxes(vals[swap], 1, 2)
    keys = pack_keys(r, c)
    order = np.argsort(keys, kind="stable")
    return BlockTripletStream(keys[order], vals[order])


def tile_blocks(big, row0, col0):
    """Split (m, 3a, 3b) matrices into 3x3 tiles at block offsets (row0, col0).

    Returns rows, cols and tiles in row-major tile order per matrix.
    """
    big = np.asarray(big, float)
    m, R, C = big.shape
    a, b = R // 3, C // 3
    tiles = big.reshape(m, a, 3, b, 3).transpose(0, 1, 3, 2, 4).reshape(m * a * b, 3, 3)
    ii, jj = np.meshgrid(np.arange(a), np.arange(b), indexing="ij")
    rows = (np.asarray(row0)[:, None] + ii.ravel()[None, :]).ravel()
    cols = (np.asarray(col0)[:, None] + jj.ravel()[None, :]).ravel()
    return rows, cols, tiles


_KIND_SHAPES = {"abd-abd": (12, 12), "abd-fem": (12, 3), "fem-abd": (3, 12), "fem-fem": (3, 3)}


def split_blocks(kind_pair, big_block, row0=0, col0=0):
    """Tile one ABD/FEM coupling block into (3x3 block, sub-row, sub-column) entries."""
    big_block = np.asarray(big_block, float)
    if big_block.shape != _KIND_SHAPES[kind_pair]:
        raise ValueError(f"{kind_pair} expects a {_KIND_SHAPES[kind_pair]} block, got {big_block.shape}")
    rows, cols, tiles = tile_blocks(big_block[None], [row0], [col0])
    return [(t, int(r), int(c)) for t, r, c in zip(tiles, rows, cols)]
