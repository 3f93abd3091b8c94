#!/usr/bin/env python3
"""Run all four benchmark presets, print their pass/fail lines and write
field/spectrum/diagnostics CSVs under out/benchmark_<n>/."""

import sys
import time

from fiberssfm.cli import main

OUT = "out"


def run_all() -> int:
    worst = 0
    for n in (1, 2, 3, 4):
        print(f"--- benchmark {n} ---")
        t0 = time.perf_counter()
        code = main(["benchmark", str(n), "--out", f"{OUT}/benchmark_{n}"])
        print(f"    ({time.perf_counter() - t0:.1f} s, exit {code})")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(run_all())
