"""Command-line front end.

Subcommands:
    run CONFIG              propagate a config file, write CSVs
    convergence             grid-refinement ladder (config file or benchmark preset)
    benchmark {1,2,3,4}     run a paper preset and report pass/fail

Exit codes: 0 success, 2 configuration error, 3 benchmark criteria failed,
4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import benchmarks
from .analysis import convergence_order, power_spectrum
from .config import ConfigError, RunSpec, parse_config
from .units import UnitError


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _write_csv(path: Path, header: list[str], rows) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(_fmt(v) for v in row) + "\n")


def _write_field_outputs(result: benchmarks.RunResult, out: Path) -> None:
    for i, env in enumerate(result.final):
        tag = f"_{i + 1}" if len(result.final) > 1 else ""
        t = env.grid.times()
        _write_csv(
            out / f"field{tag}.csv",
            ["T_ps", "re", "im", "intensity_W"],
            zip(t, env.samples.real, env.samples.imag, env.intensity()),
        )
        freq, spec = power_spectrum(env)
        _write_csv(
            out / f"spectrum{tag}.csv", ["freq_offset_THz", "power"], zip(freq, spec)
        )
        diag = result.diagnostics[i]
        if diag:
            _write_csv(
                out / f"diagnostics{tag}.csv",
                ["z_m", "peak_W", "energy_Wps", "substeps_k"],
                ((d.z, d.peak, d.energy, d.substeps) for d in diag),
            )


def _load_spec(args) -> RunSpec:
    spec = parse_config(Path(args.config).read_text())
    return _apply_overrides(spec, args)


def _apply_overrides(spec: RunSpec, args) -> RunSpec:
    if getattr(args, "n_half", None) or getattr(args, "h", None) or getattr(args, "steps", None):
        spec = benchmarks.with_resolution(
            spec, n_half=args.n_half, h=args.h, steps=args.steps
        )
    return spec


def _cmd_run(args) -> int:
    spec = _load_spec(args)
    result = benchmarks.run(spec, diagnostics_every=args.diagnostics_every)
    _write_field_outputs(result, Path(args.out))
    print(f"wrote outputs to {args.out}")
    return 0


def _cmd_benchmark(args) -> int:
    spec = _apply_overrides(benchmarks.load_preset(args.number), args)
    evaluators = {
        1: benchmarks.evaluate_benchmark1,
        2: lambda s: benchmarks.evaluate_benchmark2(s, gamma_zero=args.gamma_zero),
        3: benchmarks.evaluate_benchmark3,
        4: benchmarks.evaluate_benchmark4,
    }
    rows = evaluators[args.number](spec)
    for row in rows:
        print(row.line())
    if args.out:
        result = benchmarks.run(spec, diagnostics_every=args.diagnostics_every)
        _write_field_outputs(result, Path(args.out))
    return 0 if all(r.passed for r in rows) else 3


def _print_ladder(name: str, lad, order: float, out: Path | None) -> None:
    print(f"{name}: fitted order {order:.3f}")
    for r in lad.rungs:
        print(f"  N={r.n_half:6d}  h={r.h:g} m  M={r.m_steps}  E_inf={r.e_inf:.6e}")
    if out is not None:
        _write_csv(
            out / f"ladder_{name.replace(' ', '_')}.csv",
            ["n_half", "h_m", "m_steps", "e_inf_W"],
            ((r.n_half, r.h, r.m_steps, r.e_inf) for r in lad.rungs),
        )


def _cmd_convergence(args) -> int:
    out = Path(args.out) if args.out else None
    if args.benchmark == 3:
        results = benchmarks.benchmark3_convergence(
            doublings=args.doublings, single_doublings=args.single_doublings
        )
        for name, (lad, order) in results.items():
            _print_ladder(name, lad, order, out)
        return 0
    if args.benchmark == 1:
        lad, order = benchmarks.benchmark1_convergence(
            doublings=args.doublings, ref_factor=args.ref_factor
        )
        _print_ladder("benchmark 1", lad, order, out)
        return 0
    if not args.config:
        raise ConfigError("convergence needs a config file or --benchmark 1|3")
    spec = parse_config(Path(args.config).read_text())
    ladders = benchmarks.ladder(
        spec, doublings=args.doublings, ref_factor=args.ref_factor
    )
    for i, lad in enumerate(ladders):
        _print_ladder(f"field {i + 1}", lad, convergence_order(lad), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fiberssfm", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_resolution_flags(sp):
        sp.add_argument("--n-half", dest="n_half", type=int, default=None)
        sp.add_argument("--h", type=float, default=None, help="spatial step in m")
        sp.add_argument("--steps", type=int, default=None)

    sp = sub.add_parser("run", help="propagate a config file and write CSVs")
    sp.add_argument("config")
    sp.add_argument("--out", default="out")
    sp.add_argument("--diagnostics-every", type=int, default=1)
    add_resolution_flags(sp)
    sp.set_defaults(func=_cmd_run)

    sp = sub.add_parser("benchmark", help="run a paper benchmark preset")
    sp.add_argument("number", type=int, choices=[1, 2, 3, 4])
    sp.add_argument("--out", default=None)
    sp.add_argument("--diagnostics-every", type=int, default=1)
    sp.add_argument(
        "--gamma-zero", action="store_true",
        help="benchmark 2 only: gamma=0 recovery check",
    )
    add_resolution_flags(sp)
    sp.set_defaults(func=_cmd_benchmark)

    sp = sub.add_parser("convergence", help="grid-refinement ladder")
    sp.add_argument("config", nargs="?", default=None)
    sp.add_argument("--benchmark", type=int, choices=[1, 3], default=None)
    sp.add_argument("--doublings", type=int, default=4)
    sp.add_argument(
        "--single-doublings",
        type=int,
        default=None,
        help="doublings for the single-pulse ladders of benchmark 3 "
        "(default: same as --doublings)",
    )
    sp.add_argument("--ref-factor", type=int, default=4)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_convergence)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, UnitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
