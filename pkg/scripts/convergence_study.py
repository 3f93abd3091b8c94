#!/usr/bin/env python3
"""Grid-refinement studies for the single-mode and coupled benchmarks.

Prints one E_inf table per ladder with the fitted order, and writes the
rungs as CSV under out/convergence/.  Pass --doublings to trade accuracy
of the fit against runtime.
"""

import argparse
import sys

from fiberssfm.cli import main


def run(doublings: int) -> int:
    print("=== single-mode benchmark ladder (reference: finest rung x4) ===")
    code1 = main(
        [
            "convergence",
            "--benchmark", "1",
            "--doublings", str(doublings),
            "--out", "out/convergence",
        ]
    )
    print("=== coupled benchmark ladders (reference: finest rung) ===")
    code3 = main(
        [
            "convergence",
            "--benchmark", "3",
            "--doublings", str(doublings),
            "--out", "out/convergence",
        ]
    )
    return max(code1, code3)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--doublings", type=int, default=4)
    sys.exit(run(p.parse_args().doublings))
