"""Connectivity-enhanced multilevel additive Schwarz preconditioning."""
from .hierarchy import MasHierarchy, MasLevel, build_hierarchy, hierarchy_summary
from .partition import (PartitionResult, adjacency_from_elements, bfs_chunks, morton_order,
                        multilevel_partition, ordered_partition, partition_count, partition_graph)
from .precond import (BlockJacobi, MasError, MasPreconditioner, apply, assemble_preconditioner,
                      dense_reference)

__all__ = [
    "PartitionResult", "partition_graph", "partition_count", "multilevel_partition", "ordered_partition",
    "morton_order", "bfs_chunks", "adjacency_from_elements", "MasHierarchy", "MasLevel", "build_hierarchy",
    "hierarchy_summary", "assemble_preconditioner", "apply", "MasPreconditioner", "BlockJacobi",
    "MasError", "dense_reference",
]
