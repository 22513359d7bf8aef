import random
from collections import deque
from functools import lru_cache
from itertools import combinations

import pytest

from forestcount.graph import Multigraph


def expansion_det(rows):
    """Laplace expansion along the first remaining row, memoised on the set
    of columns still available."""
    d = len(rows)
    rows = [tuple(r) for r in rows]

    @lru_cache(maxsize=None)
    def rec(r, cols):
        if r == d:
            return 1
        total = 0
        for pos, c in enumerate(cols):
            a = rows[r][c]
            if a:
                total += (-1) ** pos * a * rec(r + 1, cols[:pos] + cols[pos + 1:])
        return total

    return rec(0, tuple(range(d)))


def is_spanning_tree(n, edges):
    """BFS check, independent of the union-find code under test."""
    if len(edges) != n - 1:
        return False
    adj = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {1}
    queue = deque([1])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def enumerate_trees(n):
    """All spanning trees of K_n as frozensets of pairs."""
    pairs = list(combinations(range(1, n + 1), 2))
    return [frozenset(t) for t in combinations(pairs, n - 1) if is_spanning_tree(n, t)]


def random_multigraph(rng, d, max_mult=3, density=0.6):
    mult = {}
    for pair in combinations(range(1, d + 1), 2):
        if rng.random() < density:
            mult[pair] = rng.randint(1, max_mult)
    return Multigraph(d, mult)


@pytest.fixture
def rng():
    return random.Random(20261015)
