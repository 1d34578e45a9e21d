#!/usr/bin/env python3
"""Benchmark the Weyl-enumeration kernels: compiled extension vs pure Python.

Enumerates the full Weyl group of a few types through both kernels,
checks that the outputs are bit-identical, and reports timings.

Usage: python benchmarks/bench_weyl.py [--types B3,D4,F4,B5] [--repeat 3]
"""

from __future__ import annotations

import argparse
import statistics
import time

from flagample.dynkin import parse_type, weyl_order
from flagample.kernels import available_backends
from flagample.rootsystem import build_root_system
from flagample.weyl import SubsystemContext


def bench_type(label: str, repeat: int) -> None:
    dt = parse_type(label)
    rs = build_root_system(dt)
    ctx = SubsystemContext(rs, rs.simple_roots)
    expected = weyl_order(dt.series, dt.rank)
    backends = available_backends()

    results = {}
    timings = {}
    for name, mod in backends.items():
        best = []
        out = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            out = mod.enumerate_group(
                ctx.gen_perms, ctx.simple_indices, 10**8
            )
            best.append(time.perf_counter() - t0)
        results[name] = tuple(bytes(a.tobytes() if hasattr(a, "tobytes") else a) for a in out)
        timings[name] = min(best), statistics.mean(best)
        assert len(out[1]) == expected, f"{label}: got {len(out[1])} elements"

    agree = len(set(results.values())) == 1
    parts = [f"{label:>4}  |W| = {expected:>8}"]
    for name in sorted(timings):
        mn, mean = timings[name]
        parts.append(f"{name}: {mn * 1000:9.1f} ms")
    if {"c", "python"} <= timings.keys():
        speedup = timings["python"][0] / timings["c"][0]
        parts.append(f"speedup: {speedup:5.1f}x")
    parts.append("outputs identical" if agree else "OUTPUT MISMATCH")
    print("  ".join(parts))
    if not agree:
        raise SystemExit(1)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--types", default="B3,D4,F4,B5")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    names = available_backends()
    print(f"available kernels: {', '.join(sorted(names))}")
    if len(names) == 1:
        print("note: compiled kernel not built; timing pure Python only")
    for label in args.types.split(","):
        bench_type(label.strip(), args.repeat)


if __name__ == "__main__":
    main()
