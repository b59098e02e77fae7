"""Reduce-by-key over sorted block streams.

The lane-group path mirrors a warp-level head-segmented reduction: values are
cut into fixed-width groups, each run of equal target index inside a group is
summed into its head, and heads of runs that straddle a group boundary merge
into the output through an accumulate (the atomic path). All other heads write
their partial sum directly. The deterministic path folds values into the
output strictly left to right, which is bitwise reproducible and matches a
plain dictionary accumulation.
"""
import numpy as np

from .triplets import BlockTripletStream, unpack_keys

DEFAULT_WIDTH = 32


def _fold(O, V, n_out):
    """Sequential left-to-right accumulation R[O[i]] += V[i]."""
    flat = V.reshape(len(V), -1)
    R = np.empty((n_out, flat.shape[1]))
    for k in range(flat.shape[1]):
        R[:, k] = np.bincount(O, weights=flat[:, k], minlength=n_out)
    return R.reshape((n_out,) + V.shape[1:])


def segment_heads(O, width):
    n = len(O)
    idx = np.arange(n)
    head = idx % width == 0
    head[1:] |= O[1:] != O[:-1]
    return np.nonzero(head)[0]


def fast_segment_reduction(O, V, width=DEFAULT_WIDTH, deterministic=False, n_out=None):
    """R[u] = sum of V[i] with O[i] == u for a nondecreasing map array O."""
    O = np.asarray(O, dtype=np.int64)
    V = np.asarray(V, dtype=float)
    if len(O) != len(V):
        raise ValueError("map array and values differ in length")
    if len(O) and np.any(O[1:] < O[:-1]):
        raise ValueError("map array must be nondecreasing")
    if n_out is None:
        n_out = int(O[-1]) + 1 if len(O) else 0
    if len(O) == 0:
        return np.zeros((n_out,) + V.shape[1:])
    if deterministic:
        return _fold(O, V, n_out)
    heads = segment_heads(O, width)
    partial = np.add.reduceat(V, heads, axis=0)
    target = O[heads]
    # a run crosses a group boundary iff its target shows up at more than one head
    multi = np.zeros(len(heads), bool)
    multi[1:] |= target[1:] == target[:-1]
    multi[:-1] |= target[1:] == target[:-1]
    R = np.zeros((n_out,) + V.shape[1:])
    direct = ~multi
    R[target[direct]] = partial[direct]
    if np.any(multi):
        R += _fold(target[multi], partial[multi], n_out)
    return R


def run_length_map(keys):
    """Unique keys plus the map array O from each key to its unique index."""
    keys = np.asarray(keys)
    if len(keys) == 0:
        return keys[:0], np.zeros(0, np.int64)
    P = keys[:-1] != keys[1:]
    O = np.zeros(len(keys), np.int64)
    np.cumsum(P, out=O[1:])
    heads = np.concatenate([[0], np.nonzero(P)[0] + 1])
    return keys[heads], O


def fast_hash_reduction(stream: BlockTripletStream, n_rows=None, width=DEFAULT_WIDTH, deterministic=False):
    """Accumulate a key-sorted stream into a SortedSymBlockCoo."""
    from .bcoo import SortedSymBlockCoo

    keys = stream.keys
    if len(keys) > 1 and np.any(keys[1:] < keys[:-1]):
        raise ValueError("stream must be sorted by key")
    uk, O = run_length_map(keys)
    R = fast_segment_reduction(O, stream.values, width, deterministic, n_out=len(uk))
    rows, cols = unpack_keys(uk)
    if n_rows is None:
        n_rows = int(max(rows.max(initial=-1), cols.max(initial=-1))) + 1
    return SortedSymBlockCoo(rows, cols, R, n_rows)


def reduce_stream(stream: BlockTripletStream, width=DEFAULT_WIDTH, deterministic=False):
    """Hash-reduce a sorted stream and return it as a stream (keys unique)."""
    uk, O = run_length_map(stream.keys)
    R = fast_segment_reduction(O, stream.values, width, deterministic, n_out=len(uk))
    return BlockTripletStream(uk, R)
