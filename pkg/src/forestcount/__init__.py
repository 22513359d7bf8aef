"""Exact spanning-tree counting for multigraphs and for complete graphs
conditioned on a spanning forest."""

from .counting import (
    cayley,
    edge_count,
    moon_count,
    pair_count,
    spanning_tree_count,
    trees_containing_forest,
)
from .errors import (
    CycleError,
    DuplicateEdgeError,
    EdgeAbsentError,
    ExactDivisionViolation,
    ForestCountError,
    ParseError,
    PartitionMismatchError,
    RangeError,
    SelfLoopError,
    SizeMismatchError,
    TooLargeError,
)
from .graph import Forest, Multigraph, VertexPartition, complete_graph, contract, validate_forest
from .linalg import (
    ExactCount,
    IntegerMatrix,
    determinant,
    integer_power,
    laplacian,
    minor,
    principal_cofactor,
)
from .oracle import brute_count_containing, brute_count_trees, deletion_contraction_count

__version__ = "0.1.0"
