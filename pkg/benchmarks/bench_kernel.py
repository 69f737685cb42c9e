"""Compare the compiled and pure-Python connectivity kernels.

    python3 benchmarks/bench_kernel.py [--repeat N]

Each workload scans every color subset of a fixed size and reports the
first one that disconnects the graph, which is the inner loop of every
connectivity and separator query.
"""

from __future__ import annotations

import argparse
import random
import time

from colornet import _pykernel
from colornet.connectivity import subset_masks
from colornet.graph import new_graph
from colornet.kernel import pack_edges, pack_masks

try:
    from colornet import _ckernel
except ImportError:  # extension not built
    _ckernel = None


def workload(n, m, p, size, seed):
    rnd = random.Random(seed)
    edges = [(u, v, rnd.randrange(m)) for u in range(n) for v in range(u + 1, n) if rnd.random() < p]
    g = new_graph(n, m, edges)
    us, vs, cs = pack_edges(*g.edge_arrays())
    masks = pack_masks(list(subset_masks(m, size)))
    return f"n={n} m={m} |E|={g.num_edges} subsets={len(masks)}", (n, us, vs, cs, masks)


def best_of(fn, args, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()
    cases = [
        workload(12, 10, 0.9, 4, 1),
        workload(20, 14, 0.9, 5, 2),
        workload(40, 16, 0.6, 5, 3),
        workload(60, 18, 0.5, 6, 4),
    ]
    print(f"{'workload':<42}{'python':>10}{'cython':>10}{'speedup':>9}")
    for label, args in cases:
        py_t, py_r = best_of(_pykernel.first_cut, args, opts.repeat)
        if _ckernel is None:
            print(f"{label:<42}{py_t:>9.3f}s{'n/a':>10}{'':>9}")
            continue
        c_t, c_r = best_of(_ckernel.first_cut, args, opts.repeat)
        assert py_r == c_r, (label, py_r, c_r)
        print(f"{label:<42}{py_t:>9.3f}s{c_t:>9.4f}s{py_t / c_t:>8.0f}x")


if __name__ == "__main__":
    main()
