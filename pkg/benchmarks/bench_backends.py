#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python reference.

Runs the hot table scans (validation, zero-dimension sweep, colored
witness sweep, axiom checks) on representative carriers and prints a
timing table with speedups.  Usage:

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from cudim import _kernels_py, catalog

try:
    from cudim import _kernels as compiled
except ImportError:
    compiled = None


def workloads():
    e6 = catalog.elementary(6)
    hom = catalog.hom_elementary(2, 5)
    lsc_v = catalog.lsc_fin("vspace", 2)
    lsc_d3 = catalog.lsc_fin("discrete3", 2, max_carrier=None)
    lsc_d4 = catalog.lsc_fin("discrete4", 2, max_carrier=None)

    def lower(P):
        return P.size, list(P.add_table), list(P.leq_table)

    out = []
    for P in (e6, hom, lsc_v):
        n, add, leq = lower(P)
        out.append((f"validate      {P.name} (n={n})",
                    lambda n=n, a=add, l=leq: _run("validate_tables", n, a, l)))
        out.append((f"dim0 sweep    {P.name} (n={n})",
                    lambda n=n, a=add, l=leq: _run("dim0_scan", n, a, l)))
        out.append((f"axiom O5      {P.name} (n={n})",
                    lambda n=n, a=add, l=leq: _run("axiom_o5", n, a, l)))
        out.append((f"axiom O6      {P.name} (n={n})",
                    lambda n=n, a=add, l=leq: _run("axiom_o6", n, a, l)))
    n, add, leq = lower(hom)
    out.append((f"2-color sweep {hom.name} (n={n}, r<=6)",
                lambda n=n, a=add, l=leq: _run("bounded_scan", n, a, l, 2, 6, 10 ** 7)))
    n, add, leq = lower(lsc_v)
    out.append((f"2-color sweep {lsc_v.name} (n={n}, r<=3)",
                lambda n=n, a=add, l=leq: _run("bounded_scan", n, a, l, 2, 3, 10 ** 7)))
    n, add, leq = lower(lsc_d3)
    out.append((f"dim0 sweep    {lsc_d3.name} (n={n})",
                lambda n=n, a=add, l=leq: _run("dim0_scan", n, a, l)))
    n, add, leq = lower(lsc_d4)
    out.append((f"dim0 sweep    {lsc_d4.name} (n={n})",
                lambda n=n, a=add, l=leq: _run("dim0_scan", n, a, l)))
    return out


_BACKEND = None


def _run(fn, *args):
    return getattr(_BACKEND, fn)(*args)


def bench(backend, job, repeat):
    global _BACKEND
    _BACKEND = backend
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = job()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if compiled is None:
        print("compiled backend not available; building it first:")
        print("  pip install -e . --no-build-isolation")
        return
    rows = []
    for label, job in workloads():
        t_py, r_py = bench(_kernels_py, job, args.repeat)
        t_c, r_c = bench(compiled, job, args.repeat)
        assert r_py == r_c, f"backend disagreement on {label}: {r_py} vs {r_c}"
        rows.append((label, t_py, t_c))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'python':>10}  {'compiled':>10}  {'speedup':>8}")
    for label, t_py, t_c in rows:
        print(f"{label.ljust(width)}  {t_py * 1e3:9.2f}ms  {t_c * 1e3:9.2f}ms  "
              f"{t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
