"""Cross-checks between the closed form, matrix-tree and brute force.

Shared by the ``verify`` subcommand and the test-suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import RangeError
from .counting import cayley, moon_count, trees_containing_forest
from .graph import DisjointSet, Forest, complete_graph, validate_forest
from .oracle import MAX_CONTAINING_VERTICES, brute_count_containing


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def forest_for_sizes(sizes) -> Forest:
    """A labelled forest with the given component sizes: consecutive labels,
    each block joined as a path."""
    edges = []
    start = 1
    for q in sizes:
        edges.extend((v, v + 1) for v in range(start, start + q - 1))
        start += q
    return validate_forest(start - 1, edges)


def random_forest(n: int, rng: random.Random, n_edges: int | None = None) -> Forest:
    """Uniformly shuffled Kruskal pass over K_n, stopped after ``n_edges`` edges."""
    if n_edges is None:
        n_edges = rng.randint(0, n - 1)
    pairs = list(combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    ds = DisjointSet(n)
    edges = []
    for u, v in pairs:
        if len(edges) == n_edges:
            break
        if ds.union(u, v):
            edges.append((u, v))
    return validate_forest(n, edges)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def three_way(f: Forest) -> tuple[int, int, int]:
    n = f.vertex_count
    return (
        int(moon_count(n, f.sizes)),
        int(trees_containing_forest(complete_graph(n), f)),
        int(brute_count_containing(n, f)),
    )


def check_partition_shapes(n: int) -> CheckResult:
    bad = []
    shapes = list(integer_partitions(n))
    for sizes in shapes:
        values = three_way(forest_for_sizes(sizes))
        if len(set(values)) != 1:
            bad.append(f"{sizes} -> {values}")
    detail = f"{len(shapes)} partition shapes agree" if not bad else "; ".join(bad)
    return CheckResult(f"three-way n={n}", not bad, detail)


def check_random_forests(n: int, count: int, rng: random.Random) -> CheckResult:
    bad = []
    for _ in range(count):
        f = random_forest(n, rng)
        values = three_way(f)
        if len(set(values)) != 1:
            bad.append(f"{sorted(f.edges)} -> {values}")
    detail = f"{count} random forests agree" if not bad else "; ".join(bad[:3])
    return CheckResult(f"random forests n={n}", not bad, detail)


def double_counting_sum(n: int) -> int:
    """Sum over every edge e of K_n of the trees containing e."""
    kn = complete_graph(n)
    return sum(
        int(trees_containing_forest(kn, validate_forest(n, [e])))
        for e in combinations(range(1, n + 1), 2)
    )


def check_double_counting(n: int) -> CheckResult:
    lhs = double_counting_sum(n)
    rhs = (n - 1) * int(cayley(n))
    return CheckResult(
        f"double counting n={n}",
        lhs == rhs,
        f"sum over edges {lhs} vs (n-1)*n^(n-2) {rhs}",
    )


def run_suite(max_n: int = 7, seed: int = 0, per_n: int = 20) -> list[CheckResult]:
    if not 2 <= max_n <= MAX_CONTAINING_VERTICES:
        raise RangeError(f"--max-n must lie in 2..{MAX_CONTAINING_VERTICES}")
    rng = random.Random(seed)
    results = [check_partition_shapes(n) for n in range(2, max_n + 1)]
    results += [check_random_forests(n, per_n, rng) for n in range(2, max_n + 1)]
    results += [check_double_counting(n) for n in range(3, 11)]
    return results
