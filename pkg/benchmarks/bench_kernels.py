"""Time the jit and numpy subset-enumeration kernels on K_n trees through a
fixed forest, and the Bareiss cofactor for K_n at larger n.

    python benchmarks/bench_kernels.py [--max-n 9] [--repeat 3]
"""

import argparse
import time
from itertools import combinations

import numpy as np

from forestcount import _kernels
from forestcount.counting import cayley, moon_count
from forestcount.graph import complete_graph
from forestcount.linalg import laplacian, principal_cofactor


def k_n_inputs(n, forced):
    parent = list(range(n))
    for u, v in forced:
        parent[v] = parent[u]
    init = np.array(parent, dtype=np.int64)
    cands = [p for p in combinations(range(n), 2) if p not in forced]
    cu = [p[0] for p in cands]
    cv = [p[1] for p in cands]
    return cu, cv, [1] * len(cands), init, n - 1 - len(forced)


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    # first call compiles (or loads the on-disk cache)
    _kernels.completions_jit(*k_n_inputs(4, []))

    print(f"{'case':<22}{'jit s':>10}{'numpy s':>10}{'speedup':>9}  count")
    for n in range(6, args.max_n + 1):
        for forced in ([], [(0, 1)], [(0, 1), (2, 3)]):
            inputs = k_n_inputs(n, forced)
            t_jit, c_jit = best_of(lambda: _kernels.completions_jit(*inputs), args.repeat)
            t_np, c_np = best_of(lambda: _kernels.completions_numpy(*inputs), 1)
            sizes = [2] * len(forced) + [1] * (n - 2 * len(forced))
            assert c_jit == c_np == moon_count(n, sizes)
            label = f"K{n} forest={len(forced)} edges"
            print(f"{label:<22}{t_jit:>10.4f}{t_np:>10.4f}{t_np / t_jit:>8.1f}x  {c_jit}")

    print()
    print(f"{'matrix-tree K_n':<22}{'seconds':>10}  digits")
    for n in (50, 100, 200):
        lap = laplacian(complete_graph(n))
        t, value = best_of(lambda: principal_cofactor(lap, 1), 1)
        assert value == cayley(n)
        print(f"{'n=' + str(n):<22}{t:>10.3f}  {len(str(value))}")


if __name__ == "__main__":
    main()
