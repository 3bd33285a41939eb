"""Compare the compiled search kernel against the pure-Python twin.

Run:  python3 benchmarks/bench_backends.py [--seeds N] [--size S]
"""

import argparse
import time

from planecolor import _kernel_c, _kernel_py
from planecolor.coloring import _csr
from planecolor.generate import generate_class_C


def bench(impl, graphs, d1, d2):
    t0 = time.perf_counter()
    results = []
    for n, indptr, indices in graphs:
        status, masks = impl.search(n, indptr, indices, d1, d2, [-1] * n, 1, None)
        results.append((status, masks))
    return time.perf_counter() - t0, results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=40)
    ap.add_argument("--size", type=int, default=60)
    ap.add_argument("--d2", type=int, default=6)
    args = ap.parse_args()

    graphs = []
    for seed in range(args.seeds):
        g = generate_class_C(seed, args.size).graph
        verts, _, indptr, indices = _csr(g)
        graphs.append((len(verts), indptr, indices))

    t_py, r_py = bench(_kernel_py, graphs, 0, args.d2)
    t_c, r_c = bench(_kernel_c, graphs, 0, args.d2)
    assert r_py == r_c, "backends disagree"
    print(f"instances: {args.seeds} graphs, ~{args.size} vertices, (0,{args.d2})")
    print(f"python kernel:   {t_py:8.4f} s")
    print(f"compiled kernel: {t_c:8.4f} s")
    print(f"speedup:         {t_py / t_c:8.2f}x  (identical outputs)")


if __name__ == "__main__":
    main()
