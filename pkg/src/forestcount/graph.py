"""Multigraphs, spanning forests and forest contraction.

Vertices are the integers ``1..n`` throughout.  Edge pairs are stored
normalised as ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    CycleError,
    DuplicateEdgeError,
    PartitionMismatchError,
    RangeError,
    SelfLoopError,
)

Pair = tuple[int, int]


class DisjointSet:
    """Union-find over ``1..n`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already one set."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def normalise_pair(u: int, v: int, n: int, line: int | None = None) -> Pair:
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}", line=line)
    for x in (u, v):
        if not 1 <= x <= n:
            raise RangeError(f"vertex {x} outside 1..{n}", line=line)
    return (u, v) if u < v else (v, u)


def _check_order(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise RangeError(f"vertex count must be a positive integer, got {n!r}")


class Multigraph:
    """Loop-free undirected multigraph on vertices ``1..vertex_count``.

    Only pairs with positive multiplicity are stored; ``multiplicity`` returns
    0 for absent pairs.  Instances are immutable.
    """

    __slots__ = ("_n", "_mult")

    def __init__(self, vertex_count: int, multiplicity: Mapping[Pair, int] | None = None):
        _check_order(vertex_count)
        mult: dict[Pair, int] = {}
        for (u, v), k in (multiplicity or {}).items():
            pair = normalise_pair(u, v, vertex_count)
            if pair in mult:
                raise DuplicateEdgeError(f"pair {pair} given twice")
            k = int(k)
            if k < 0:
                raise RangeError(f"negative multiplicity {k} on {pair}")
            if k:
                mult[pair] = k
        self._n = vertex_count
        self._mult = dict(sorted(mult.items()))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable) -> "Multigraph":
        """Build from ``(u, v)`` or ``(u, v, mult)`` records; repeated pairs are rejected."""
        mult: dict[Pair, int] = {}
        for rec in edges:
            u, v, *rest = rec
            pair = normalise_pair(u, v, vertex_count)
            if pair in mult:
                raise DuplicateEdgeError(f"pair {pair} given twice")
            mult[pair] = rest[0] if rest else 1
        return cls(vertex_count, mult)

    @property
    def vertex_count(self) -> int:
        return self._n

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self._mult.get((u, v) if u < v else (v, u), 0)

    def edges(self) -> list[tuple[int, int, int]]:
        """``(u, v, multiplicity)`` for every pair carrying an edge, sorted."""
        return [(u, v, k) for (u, v), k in self._mult.items()]

    def pairs(self) -> dict[Pair, int]:
        return dict(self._mult)

    @property
    def total_multiplicity(self) -> int:
        return sum(self._mult.values())

    def is_connected(self) -> bool:
        ds = DisjointSet(self._n)
        parts = self._n
        for u, v in self._mult:
            if ds.union(u, v):
                parts -= 1
        return parts == 1

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._mult == other._mult

    def __hash__(self):
        return hash((self._n, tuple(self._mult.items())))

    def __repr__(self):
        return f"Multigraph({self._n}, {self._mult!r})"


class VertexPartition:
    """Disjoint blocks covering ``1..n``, ordered by their smallest vertex."""

    __slots__ = ("_blocks",)

    def __init__(self, blocks: Iterable[Iterable[int]]):
        normalised = [tuple(sorted(b)) for b in blocks]
        if not normalised or any(not b for b in normalised):
            raise PartitionMismatchError("partition needs at least one non-empty block")
        normalised.sort(key=lambda b: b[0])
        self._blocks = tuple(normalised)
        seen = [v for b in self._blocks for v in b]
        n = len(seen)
        if sorted(seen) != list(range(1, n + 1)):
            raise PartitionMismatchError(f"blocks do not partition 1..{n}")

    @classmethod
    def singletons(cls, n: int) -> "VertexPartition":
        _check_order(n)
        return cls([v] for v in range(1, n + 1))

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self._blocks

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self._blocks)

    @property
    def vertex_count(self) -> int:
        return sum(self.sizes)

    def __len__(self):
        return len(self._blocks)

    def block_index(self) -> dict[int, int]:
        """Map each vertex to the 1-based index of its block."""
        return {v: i for i, b in enumerate(self._blocks, 1) for v in b}

    def __eq__(self, other):
        if not isinstance(other, VertexPartition):
            return NotImplemented
        return self._blocks == other._blocks

    def __hash__(self):
        return hash(self._blocks)

    def __repr__(self):
        return f"VertexPartition({[list(b) for b in self._blocks]})"


class Forest:
    """A validated acyclic edge set on ``1..n`` plus its component partition.

    Build instances through :func:`validate_forest`.
    """

    __slots__ = ("_n", "_edges", "_partition")

    def __init__(self, vertex_count: int, edges: frozenset[Pair], partition: VertexPartition):
        self._n = vertex_count
        self._edges = edges
        self._partition = partition

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[Pair]:
        return self._edges

    @property
    def partition(self) -> VertexPartition:
        return self._partition

    @property
    def sizes(self) -> tuple[int, ...]:
        return self._partition.sizes

    def __eq__(self, other):
        if not isinstance(other, Forest):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Forest({self._n}, {sorted(self._edges)})"


def complete_graph(n: int) -> Multigraph:
    _check_order(n)
    return Multigraph(n, {pair: 1 for pair in combinations(range(1, n + 1), 2)})


def validate_forest(n: int, edges: Iterable[Iterable[int]]) -> Forest:
    """Check that ``edges`` is a forest on ``1..n`` and derive its components.

    Raises SelfLoopError, RangeError, DuplicateEdgeError or CycleError.
    """
    _check_order(n)
    ds = DisjointSet(n)
    seen: set[Pair] = set()
    for edge in edges:
        u, v = edge
        pair = normalise_pair(u, v, n)
        if pair in seen:
            raise DuplicateEdgeError(f"edge {pair} given twice")
        seen.add(pair)
        if not ds.union(*pair):
            raise CycleError(f"edge {pair} closes a cycle")
    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(ds.find(v), []).append(v)
    return Forest(n, frozenset(seen), VertexPartition(groups.values()))


def contract(g: Multigraph, p: VertexPartition) -> Multigraph:
    """Shrink each block of ``p`` to one vertex.

    Block ``i`` becomes vertex ``i``.  Multiplicities of edges running between
    two blocks are summed; edges inside a block are dropped.
    """
    if p.vertex_count != g.vertex_count:
        raise PartitionMismatchError(
            f"partition covers {p.vertex_count} vertices, graph has {g.vertex_count}"
        )
    where = p.block_index()
    mult: dict[Pair, int] = {}
    for u, v, k in g.edges():
        a, b = where[u], where[v]
        if a == b:
            continue
        pair = (a, b) if a < b else (b, a)
        mult[pair] = mult.get(pair, 0) + k
    return Multigraph(len(p), mult)
