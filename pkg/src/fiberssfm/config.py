"""Run configuration: YAML schema with mandatory units, validated into a
RunSpec in canonical units (ps, m, W).

Schema (single mode; two_mode adds a second pulses/fibers entry and a
coupling table):

    mode: single | two_mode
    scheme: muscl | upwind1
    grid:        {n_half: 2048, window: "30 ps"}
    propagation: {step: "10 m", steps: 100}
    pulses:
      - {peak_power: "0.625 mW", half_width: "80 fs", chirp: 0.0}
    fibers:
      - alpha: "0 1/m"
        beta2: "0.5 ps^2/km"
        beta3: "0.07 ps^3/km"
        gamma: "0.1 1/(W m)"
        wavelength: "1550 nm"
        raman_time: "3 fs"
        alternating: {period: "2 km", flip: [beta2, beta3]}   # optional
    coupling:    {delta: "0.015625 fs/m", b: [2, 2], c: [2, 2]}

Unknown keys are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

import yaml

from . import units
from .grid import FiberParams, SimGrid, TwoModeParams, make_grid, steepening_time
from .nonlinear_single import Scheme
from .propagator import DispersionMap


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class PulseSpec:
    p0: float  # W
    t0: float  # ps
    chirp: float = 0.0


@dataclass
class RunSpec:
    mode: str
    scheme: Scheme
    grid: SimGrid
    h: float
    m_steps: int
    l_max: float
    pulses: list[PulseSpec]
    fibers: list[FiberParams]
    maps: list[DispersionMap]
    coupling: TwoModeParams | None = None


def _require(table: dict, key: str, where: str):
    if key not in table:
        raise ConfigError(f"missing required key {key!r} in {where}")
    return table[key]


def _check_keys(table, allowed: set[str], where: str) -> None:
    if not isinstance(table, dict):
        raise ConfigError(f"{where} must be a mapping")
    unknown = set(table) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in {where}: {sorted(unknown)}")


def _parse_pulse(table, where: str) -> PulseSpec:
    _check_keys(table, {"peak_power", "half_width", "chirp"}, where)
    p0 = units.parse_quantity(_require(table, "peak_power", where), units.POWER, f"{where}.peak_power")
    t0 = units.parse_quantity(_require(table, "half_width", where), units.TIME, f"{where}.half_width")
    chirp = units.parse_quantity(table.get("chirp", 0.0), units.DIMENSIONLESS, f"{where}.chirp")
    if p0 < 0:
        raise ConfigError(f"{where}.peak_power must be non-negative")
    if t0 <= 0:
        raise ConfigError(f"{where}.half_width must be positive")
    return PulseSpec(p0=p0, t0=t0, chirp=chirp)


def _parse_fiber(table, where: str, l_max: float) -> tuple[FiberParams, DispersionMap]:
    allowed = {"alpha", "beta2", "beta3", "gamma", "wavelength", "raman_time", "alternating"}
    _check_keys(table, allowed, where)
    q = units.parse_quantity
    lam = q(_require(table, "wavelength", where), units.LENGTH, f"{where}.wavelength")
    params = FiberParams(
        alpha=q(_require(table, "alpha", where), units.PER_LENGTH, f"{where}.alpha"),
        beta2=q(_require(table, "beta2", where), units.TIME2_PER_LENGTH, f"{where}.beta2"),
        beta3=q(_require(table, "beta3", where), units.TIME3_PER_LENGTH, f"{where}.beta3"),
        gamma=q(_require(table, "gamma", where), units.PER_POWER_LENGTH, f"{where}.gamma"),
        s_steep=steepening_time(lam),
        t_raman=q(_require(table, "raman_time", where), units.TIME, f"{where}.raman_time"),
        lambda0=lam,
    )
    alt = table.get("alternating")
    if alt is None:
        return params, DispersionMap.constant(params, l_max)
    _check_keys(alt, {"period", "flip"}, f"{where}.alternating")
    period = q(_require(alt, "period", f"{where}.alternating"), units.LENGTH, f"{where}.alternating.period")
    flip = alt.get("flip", ["beta2", "beta3"])
    if not isinstance(flip, list) or not all(
        f in ("alpha", "beta2", "beta3", "gamma") for f in flip
    ):
        raise ConfigError(f"{where}.alternating.flip must list coefficient names")
    return params, DispersionMap.alternating(params, period, l_max, tuple(flip))


def parse_config(text: str) -> RunSpec:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"config parse error: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a mapping")
    _check_keys(doc, {"mode", "scheme", "grid", "propagation", "pulses", "fibers", "coupling"}, "config")

    mode = _require(doc, "mode", "config")
    if mode not in ("single", "two_mode"):
        raise ConfigError(f"mode must be 'single' or 'two_mode', got {mode!r}")
    scheme_name = doc.get("scheme", "muscl")
    try:
        scheme = Scheme(scheme_name)
    except ValueError:
        raise ConfigError(f"unknown scheme {scheme_name!r}") from None

    gtab = _require(doc, "grid", "config")
    _check_keys(gtab, {"n_half", "window"}, "grid")
    n_half = _require(gtab, "n_half", "grid")
    if not isinstance(n_half, int) or n_half < 2:
        raise ConfigError("grid.n_half must be an integer >= 2")
    window = units.parse_quantity(_require(gtab, "window", "grid"), units.TIME, "grid.window")
    if window <= 0:
        raise ConfigError("grid.window must be positive")
    grid = make_grid(n_half, window)

    ptab = _require(doc, "propagation", "config")
    _check_keys(ptab, {"step", "steps"}, "propagation")
    h = units.parse_quantity(_require(ptab, "step", "propagation"), units.LENGTH, "propagation.step")
    m_steps = _require(ptab, "steps", "propagation")
    if not isinstance(m_steps, int) or m_steps < 0:
        raise ConfigError("propagation.steps must be a non-negative integer")
    if h <= 0:
        raise ConfigError("propagation.step must be positive")
    l_max = h * m_steps

    n_fields = 1 if mode == "single" else 2
    pulses_raw = _require(doc, "pulses", "config")
    fibers_raw = _require(doc, "fibers", "config")
    if not isinstance(pulses_raw, list) or len(pulses_raw) != n_fields:
        raise ConfigError(f"pulses must list exactly {n_fields} entry/entries")
    if not isinstance(fibers_raw, list) or len(fibers_raw) != n_fields:
        raise ConfigError(f"fibers must list exactly {n_fields} entry/entries")
    pulses = [_parse_pulse(p, f"pulses[{i}]") for i, p in enumerate(pulses_raw)]
    parsed = [_parse_fiber(f, f"fibers[{i}]", l_max) for i, f in enumerate(fibers_raw)]
    fibers = [p for p, _ in parsed]
    maps = [m for _, m in parsed]

    coupling = None
    if mode == "two_mode":
        ctab = _require(doc, "coupling", "config")
        _check_keys(ctab, {"delta", "b", "c"}, "coupling")
        delta = units.parse_quantity(_require(ctab, "delta", "coupling"), units.TIME_PER_LENGTH, "coupling.delta")
        b = _require(ctab, "b", "coupling")
        c = _require(ctab, "c", "coupling")
        for name, vals in (("b", b), ("c", c)):
            if not isinstance(vals, list) or len(vals) != 2 or any(
                not isinstance(v, (int, float)) or v < 0 for v in vals
            ):
                raise ConfigError(f"coupling.{name} must be two non-negative numbers")
        coupling = TwoModeParams(
            mode=(fibers[0], fibers[1]),
            delta=delta,
            b_xpm=(float(b[0]), float(b[1])),
            c_xpm=(float(c[0]), float(c[1])),
        )
    elif "coupling" in doc:
        raise ConfigError("coupling table is only valid for mode: two_mode")

    return RunSpec(
        mode=mode,
        scheme=scheme,
        grid=grid,
        h=h,
        m_steps=m_steps,
        l_max=l_max,
        pulses=pulses,
        fibers=fibers,
        maps=maps,
        coupling=coupling,
    )
