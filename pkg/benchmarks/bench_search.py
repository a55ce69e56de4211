"""Compare the compiled and pure-Python search kernels on family point sets.

    python3 benchmarks/bench_search.py [--repeat 3] [--quick]

Both backends must return identical leaf lists; the script exits 1 if not.
"""
from __future__ import annotations

import argparse
import sys
import time

from pseudotri.geom import make_almost_convex, make_double_chain, make_single_chain
from pseudotri.search import _compiled, build_problem, run

CASES = [
    ("single-chain l=4", lambda: make_single_chain(4), True),
    ("single-chain l=5", lambda: make_single_chain(5), False),
    ("single-chain l=6", lambda: make_single_chain(6), True),
    ("double circle v=4", lambda: make_almost_convex(4, (0, 1, 2, 3)), False),
    ("double chain 2,2", lambda: make_double_chain(2, 2), False),
    ("almost-convex 6,3", lambda: make_almost_convex(6, (0, 1, 2)), False),
]


def best_of(fn, repeat: int) -> tuple[float, list]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small cases only")
    args = ap.parse_args(argv)
    if _compiled is None:
        print("compiled backend not built; run `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'case':22} {'pointed':>7} {'leaves':>8} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    status = 0
    for name, make, pointed in CASES:
        ps = make()
        if args.quick and ps.n > 8:
            continue
        problem = build_problem(ps)
        tc, out_c = best_of(lambda: run(problem, pointed, backend="cython"), args.repeat)
        tp, out_p = best_of(lambda: run(problem, pointed, backend="python"), max(1, args.repeat // 3))
        if out_c != out_p:
            print(f"{name}: backends disagree")
            status = 1
        print(f"{name:22} {str(pointed):>7} {len(out_c):>8} {tc:>10.4f} {tp:>10.4f} {tp / tc:>7.1f}x")
    return status


if __name__ == "__main__":
    sys.exit(main())
