"""Subset-enumeration kernel behind the brute-force oracles.

The question answered is always the same: starting from a union-find state
``init`` over ``d`` vertices (``init[v]`` is the root of ``v``), sum the
weight products over all ``k``-subsets of the ``P`` candidate edges whose
insertion never joins two already-connected vertices.  With ``k`` equal to
the number of initial components minus one, those subsets are exactly the
ones completing ``init`` to a spanning tree.

Two interchangeable implementations:

* ``completions_jit``: numba ``@njit``, one subset at a time with union-find
  and prefix pruning.
* ``completions_numpy``: batches of subsets, vectorised label propagation.

``FORESTCOUNT_NO_JIT=1`` (or a missing numba) selects the numpy path.
The jit path needs the answer to fit in int64 (``fits_int64`` bounds it);
when it might not, both entry points use the numpy path with object
(bigint) weights.
"""

from __future__ import annotations

import os
from itertools import combinations, islice
from math import comb

import numpy as np

_INT64_LIMIT = 2**62

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_JIT = HAVE_NUMBA and os.environ.get("FORESTCOUNT_NO_JIT", "").lower() not in (
    "1",
    "true",
    "yes",
)

CHUNK = 1 << 16


def fits_int64(weights, k: int) -> bool:
    p = len(weights)
    if p < k:
        return True
    top = max((int(w) for w in weights), default=1)
    return comb(p, k) * top**k < _INT64_LIMIT


def completions_numpy(cu, cv, weights, init, k: int) -> int:
    p = len(cu)
    if k == 0:
        return 1
    if p < k:
        return 0
    cu = np.asarray(cu, dtype=np.int64)
    cv = np.asarray(cv, dtype=np.int64)
    init = np.asarray(init, dtype=np.int64)
    if fits_int64(weights, k):
        w = np.asarray(weights, dtype=np.int64)
    else:
        w = np.array([int(x) for x in weights], dtype=object)
    total = 0
    combos = combinations(range(p), k)
    while True:
        flat = np.fromiter(
            (i for c in islice(combos, CHUNK) for i in c), dtype=np.int64
        )
        if flat.size == 0:
            break
        chosen = flat.reshape(-1, k)
        s = chosen.shape[0]
        rows = np.arange(s)
        labels = np.broadcast_to(init, (s, init.shape[0])).copy()
        ok = np.ones(s, dtype=bool)
        for t in range(k):
            e = chosen[:, t]
            a = labels[rows, cu[e]]
            b = labels[rows, cv[e]]
            ok &= a != b
            labels = np.where(labels == b[:, None], a[:, None], labels)
        if ok.any():
            total += int(w[chosen[ok]].prod(axis=1).sum())
    return total


def _completions_py(cu, cv, w, init, k):
    p = cu.shape[0]
    d = init.shape[0]
    if k == 0:
        return 1
    if p < k:
        return 0
    idx = np.arange(k)
    parent = np.empty(d, dtype=np.int64)
    total = 0
    while True:
        for i in range(d):
            parent[i] = init[i]
        prod = 1
        bad = -1
        for t in range(k):
            e = idx[t]
            a = cu[e]
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            b = cv[e]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a == b:
                bad = t
                break
            parent[b] = a
            prod *= w[e]
        if bad < 0:
            total += prod
            t = k - 1
        else:
            # every subset sharing idx[:bad + 1] holds the same cycle
            t = bad
        while t >= 0 and idx[t] == p - k + t:
            t -= 1
        if t < 0:
            break
        idx[t] += 1
        for s in range(t + 1, k):
            idx[s] = idx[s - 1] + 1
    return total


if HAVE_NUMBA:
    _completions_compiled = njit(cache=True)(_completions_py)
else:  # pragma: no cover
    _completions_compiled = None


def completions_jit(cu, cv, weights, init, k: int) -> int:
    if _completions_compiled is None or not fits_int64(weights, k):
        return completions_numpy(cu, cv, weights, init, k)
    return int(
        _completions_compiled(
            np.asarray(cu, dtype=np.int64),
            np.asarray(cv, dtype=np.int64),
            np.asarray(weights, dtype=np.int64),
            np.asarray(init, dtype=np.int64),
            k,
        )
    )


def count_completions(cu, cv, weights, init, k: int) -> int:
    """Dispatch to the kernel selected at import time."""
    if USE_JIT:
        return completions_jit(cu, cv, weights, init, k)
    return completions_numpy(cu, cv, weights, init, k)
