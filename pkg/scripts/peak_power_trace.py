#!/usr/bin/env python3
"""Peak-power evolution along a dispersion-managed link.

Runs the single-mode dispersion-managed preset and prints a coarse text
profile of the peak power versus distance, the measured oscillation
period, and the pulse energy drift.
"""

import numpy as np

from fiberssfm import benchmarks
from fiberssfm.analysis import oscillation_period


def run() -> None:
    spec = benchmarks.load_preset(2)
    result = benchmarks.run(spec, diagnostics_every=1)
    diag = result.diagnostics[0]
    z = np.array([d.z for d in diag])
    peak = np.array([d.peak for d in diag])
    energy = np.array([d.energy for d in diag])

    print(f"{'z [km]':>8}  {'peak [uW]':>10}  profile")
    lo, hi = peak.min(), peak.max()
    for i in range(0, len(diag), len(diag) // 40):
        bar = "#" * int(1 + 50 * (peak[i] - lo) / (hi - lo))
        print(f"{z[i] / 1e3:8.1f}  {peak[i] * 1e6:10.4f}  {bar}")

    print(f"\noscillation period: {oscillation_period(z, peak) / 1e3:.3f} km")
    drift = abs(energy[-1] - energy[0]) / energy[0]
    print(f"relative energy drift over the link: {drift:.3e}")


if __name__ == "__main__":
    run()
