"""Brute-force spanning-tree counters.

These exist to certify the matrix-tree and closed-form paths at small sizes,
so they work straight from the definitions: subset enumeration and the
deletion-contraction recursion.  Neither touches a Laplacian.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import _kernels
from .errors import EdgeAbsentError, PartitionMismatchError, TooLargeError
from .graph import DisjointSet, Forest, Multigraph, complete_graph, validate_forest
from .linalg import ExactCount

MAX_SUBSET_VERTICES = 10
MAX_CONTAINING_VERTICES = 9
MAX_RECURSION_VERTICES = 12


def _completions(g: Multigraph, forest: Forest) -> int:
    """Weighted count of edge sets S with forest.edges | S a spanning tree of g."""
    n = g.vertex_count
    ds = DisjointSet(n)
    for u, v in forest.edges:
        ds.union(u, v)
    init = np.array([ds.find(v) - 1 for v in range(1, n + 1)], dtype=np.int64)
    cu, cv, w = [], [], []
    for u, v, k in g.edges():
        if (u, v) in forest.edges:
            continue
        cu.append(u - 1)
        cv.append(v - 1)
        w.append(k)
    k = n - 1 - len(forest.edges)
    return _kernels.count_completions(cu, cv, w, init, k)


def brute_count_trees(g: Multigraph) -> ExactCount:
    """Sum over (d-1)-subsets of edge-carrying pairs that form a spanning tree
    of the product of their multiplicities."""
    d = g.vertex_count
    if d > MAX_SUBSET_VERTICES:
        raise TooLargeError(f"subset enumeration limited to {MAX_SUBSET_VERTICES} vertices, got {d}")
    return ExactCount(_completions(g, validate_forest(d, [])))


def brute_count_containing(n: int, f: Forest | Iterable) -> ExactCount:
    """Spanning trees of K_n that contain every edge of ``f``, by enumeration.

    ``f`` may be a Forest or a raw edge list (validated here).
    """
    if n > MAX_CONTAINING_VERTICES:
        raise TooLargeError(f"enumeration limited to n <= {MAX_CONTAINING_VERTICES}, got {n}")
    if not isinstance(f, Forest):
        f = validate_forest(n, f)
    if f.vertex_count != n:
        raise PartitionMismatchError(f"forest on {f.vertex_count} vertices, expected {n}")
    return ExactCount(_completions(complete_graph(n), f))


def brute_count_graph_containing(g: Multigraph, f: Forest) -> ExactCount:
    """Spanning trees of ``g`` through every edge of ``f``, by enumeration.

    Each forest edge is one fixed edge; parallel copies of it can never be
    added without closing a cycle.
    """
    if g.vertex_count > MAX_SUBSET_VERTICES:
        raise TooLargeError(
            f"subset enumeration limited to {MAX_SUBSET_VERTICES} vertices, got {g.vertex_count}"
        )
    if f.vertex_count != g.vertex_count:
        raise PartitionMismatchError("forest and graph differ in vertex count")
    for u, v in sorted(f.edges):
        if g.multiplicity(u, v) < 1:
            raise EdgeAbsentError(f"forest edge {(u, v)} is not in the graph")
    return ExactCount(_completions(g, f))


def _connected(vertices: frozenset, mult: dict) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for a, b in mult:
        adj[a].append(b)
        adj[b].append(a)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def _delete_contract(vertices: frozenset, mult: dict) -> int:
    if len(vertices) == 1:
        return 1
    if not _connected(vertices, mult):
        return 0
    (a, b), k = min(mult.items())
    deleted = dict(mult)
    del deleted[(a, b)]
    # merge b into the lower label a; the a-b bundle would become loops
    merged: dict = {}
    for (x, y), m in deleted.items():
        x = a if x == b else x
        y = a if y == b else y
        if x == y:
            continue
        pair = (x, y) if x < y else (y, x)
        merged[pair] = merged.get(pair, 0) + m
    return _delete_contract(vertices, deleted) + k * _delete_contract(vertices - {b}, merged)


def deletion_contraction_count(g: Multigraph) -> ExactCount:
    d = g.vertex_count
    if d > MAX_RECURSION_VERTICES:
        raise TooLargeError(
            f"deletion-contraction limited to {MAX_RECURSION_VERTICES} vertices, got {d}"
        )
    return ExactCount(_delete_contract(frozenset(range(1, d + 1)), g.pairs()))

