"""Time the array kernels on both backends across field sizes.

The numba backend pays a one-off JIT cost on first call, so every stage is
warmed once before timing and the best of --repeats runs is reported.
"""

import argparse
import time

from charvar._kernels import get_backend
from charvar.fforacle import _tables


def best_of(fn, repeats: int) -> float:
    fn()
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def run(q: int, repeats: int) -> None:
    t = _tables(q)
    backends = [get_backend("numpy"), get_backend("numba")]
    stages = [
        ("mul_table", lambda be: be.mul_table(t.entries, t.lookup, q)),
        ("commutator_counts", lambda be: be.commutator_counts(t.mul, t.inv)),
    ]
    n1 = get_backend("numpy").commutator_counts(t.mul, t.inv)
    stages.append(("convolve", lambda be: be.convolve(n1, n1, t.mul, t.inv)))
    for label, stage in stages:
        times = [best_of(lambda be=be: stage(be), repeats) for be in backends]
        ratio = times[0] / times[1] if times[1] else float("inf")
        print("q=%-3d n=%-5d %-18s numpy %8.4fs   numba %8.4fs   %6.1fx"
              % (q, t.order, label, times[0], times[1], ratio))


def main() -> None:
    parser = argparse.ArgumentParser(
        description="compare the numpy and numba kernel backends")
    parser.add_argument("--q", default="5,7,11,13",
                        help="comma-separated odd primes (default 5,7,11,13)")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timed runs per stage; the best is kept")
    args = parser.parse_args()
    for q in (int(part) for part in args.q.split(",") if part):
        run(q, args.repeats)


if __name__ == "__main__":
    main()
