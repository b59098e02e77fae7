"""Keyed 3x3 block streams, reduce-by-key kernels and symmetric block SpMV."""
from .abd import NodeLayout, map_node_pairs, two_level_abd_reduce
from .bcoo import SortedSymBlockCoo, dump_matrix, load_matrix, srbk_spmv
from .reduction import (DEFAULT_WIDTH, fast_hash_reduction, fast_segment_reduction, reduce_stream,
                        run_length_map)
from .triplets import (BlockTripletStream, pack_keys, sort_and_canonicalize, split_blocks, tile_blocks,
                       unpack_keys)

__all__ = [
    "BlockTripletStream", "pack_keys", "unpack_keys", "sort_and_canonicalize", "split_blocks",
    "tile_blocks", "fast_hash_reduction", "fast_segment_reduction", "reduce_stream", "run_length_map",
    "DEFAULT_WIDTH", "SortedSymBlockCoo", "srbk_spmv", "dump_matrix", "load_matrix", "NodeLayout",
    "map_node_pairs", "two_level_abd_reduce",
]
