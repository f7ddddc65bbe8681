"""Compare the compiled scan kernel against the pure-Python fallback.

Usage: python3 benchmarks/scan_benchmark.py [primes...]
"""

import sys
import time

from desmic_kit.scan import HAVE_FAST, run_scan
from desmic_kit.scalars import sqrt_minus_one


def bench(p):
    c = sqrt_minus_one(p).v
    t0 = time.perf_counter()
    pure = run_scan(p, c, force_pure=True)
    t_pure = time.perf_counter() - t0
    row = [p, len(pure), "%.3fs" % t_pure]
    if HAVE_FAST:
        t0 = time.perf_counter()
        fast = run_scan(p, c)
        t_fast = time.perf_counter() - t0
        assert fast == pure, "kernel and fallback disagree"
        row += ["%.3fs" % t_fast, "%.1fx" % (t_pure / max(t_fast, 1e-9))]
    else:
        row += ["(not built)", "-"]
    return row


def main():
    primes = [int(a) for a in sys.argv[1:]] or [13, 17, 29]
    print("compiled kernel available:", HAVE_FAST)
    print("%6s %8s %10s %10s %8s" % ("p", "points", "pure", "compiled",
                                     "speedup"))
    for p in primes:
        print("%6s %8s %10s %10s %8s" % tuple(bench(p)))


if __name__ == "__main__":
    main()
