"""Spanning-tree counts: matrix-tree for arbitrary multigraphs, and closed
forms for complete graphs conditioned on a spanning forest."""

from __future__ import annotations

from typing import Sequence

from .errors import EdgeAbsentError, PartitionMismatchError, RangeError, SizeMismatchError
from .graph import Forest, Multigraph, contract
from .linalg import ExactCount, integer_power, laplacian, principal_cofactor


def spanning_tree_count(g: Multigraph) -> ExactCount:
    """Number of spanning trees of ``g``, parallel edges counted separately."""
    return ExactCount(principal_cofactor(laplacian(g), 1))


def trees_containing_forest(g: Multigraph, f: Forest) -> ExactCount:
    """Spanning trees of ``g`` that contain every edge of ``f``.

    Counted as the spanning trees of ``g`` with each component of ``f``
    shrunk to a single vertex.
    """
    if f.vertex_count != g.vertex_count:
        raise PartitionMismatchError(
            f"forest on {f.vertex_count} vertices, graph on {g.vertex_count}"
        )
    for u, v in sorted(f.edges):
        if g.multiplicity(u, v) < 1:
            raise EdgeAbsentError(f"forest edge {(u, v)} is not in the graph")
    return spanning_tree_count(contract(g, f.partition))


def moon_count(n: int, sizes: Sequence[int]) -> ExactCount:
    """Trees of K_n containing a forest with component sizes ``sizes``:
    ``prod(sizes) * n**(m - 2)``, and 1 when there is a single component."""
    sizes = [int(q) for q in sizes]
    if not sizes:
        raise SizeMismatchError("need at least one component size")
    if any(q < 1 for q in sizes):
        raise SizeMismatchError(f"component sizes must be positive: {sizes}")
    if sum(sizes) != n:
        raise SizeMismatchError(f"sizes sum to {sum(sizes)}, expected n = {n}")
    m = len(sizes)
    if m == 1:
        return ExactCount(1)
    product = 1
    for q in sizes:
        product *= q
    return ExactCount(product * integer_power(n, m - 2))


def _require(n: int, least: int, what: str) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < least:
        raise RangeError(f"{what} needs n >= {least}, got {n!r}")


def cayley(n: int) -> ExactCount:
    _require(n, 1, "cayley")
    return moon_count(n, [1] * n)


def edge_count(n: int) -> ExactCount:
    """Spanning trees of K_n through one fixed edge."""
    _require(n, 2, "edge_count")
    return moon_count(n, [2] + [1] * (n - 2))


def pair_count(n: int, intersecting: bool) -> ExactCount:
    """Spanning trees of K_n through two fixed edges, sharing a vertex or not."""
    if intersecting:
        _require(n, 3, "intersecting pair_count")
        return moon_count(n, [3] + [1] * (n - 3))
    _require(n, 4, "disjoint pair_count")
    return moon_count(n, [2, 2] + [1] * (n - 4))
