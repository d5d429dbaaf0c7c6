"""Compare the compiled and pure-Python congruence kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times Con(L) on the bundled 15-element algebra and on a batch of random
constructed algebras, plus brute-force enumeration on the 10-element one.
"""

import argparse
import time

from msalg import kernels
from msalg.congruence import all_congruences, brute_force_congruences
from msalg.generate import random_triples
from msalg.io import load_algebra
from msalg.triple import construct


def _fresh(A):
    # flat tables are cached on the algebra; drop them so each run pays the same setup
    A.__dict__.pop("_flat", None)
    return A


def workloads():
    l2 = load_algebra("l2.alg")
    m2 = load_algebra("m2.alg")
    batch = [construct(t).algebra for t in random_triples(40, seed=11)]
    return [
        ("Con(L2), 15 elements", lambda: all_congruences(_fresh(l2))),
        ("Con over 40 random algebras", lambda: [all_congruences(_fresh(A)) for A in batch]),
        ("brute force on M2, 10 elements", lambda: brute_force_congruences(_fresh(m2))),
    ]


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [b for b in ("python", "cython") if b in kernels.BACKENDS]
    print(f"{'workload':34s}" + "".join(f"{b:>12s}" for b in backends) + "     speedup")
    for label, fn in workloads():
        times = {}
        for b in backends:
            kernels.use_backend(b)
            times[b] = timeit(fn, args.repeat)
        row = f"{label:34s}" + "".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
        if len(backends) == 2:
            row += f"  {times['python'] / times['cython']:8.1f}x"
        print(row)
    if "cython" not in kernels.BACKENDS:
        print("compiled kernels not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
