"""Full SSFM drivers: symmetric linear/nonlinear sequencing, spatially
dependent fiber parameters with exact interval averaging, single- and
two-mode propagation loops."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .grid import ComplexEnvelope, FiberParams, SimGrid, TwoModeParams, madelung_forward, madelung_inverse
from .linear import LinearHalfStepPlan, apply_linear_half_step, build_plan
from .nonlinear_single import (
    NonlinearStepParams,
    Scheme,
    nonlinear_operator_apply_counted,
)
from .nonlinear_twomode import TwoModePolar, coupled_nonlinear_apply_counted


@dataclass(frozen=True)
class DispersionMap:
    """Piecewise-constant fiber coefficients over [0, l_max]."""

    segments: tuple[tuple[float, float, FiberParams], ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("map needs at least one segment")
        z = self.segments[0][0]
        if z != 0.0:
            raise ValueError("map must start at z = 0")
        for z0, z1, _ in self.segments:
            if z1 <= z0:
                raise ValueError("segment must have z_end > z_start")
            if z0 != z:
                raise ValueError("segments must be contiguous")
            z = z1

    @property
    def l_max(self) -> float:
        return self.segments[-1][1]

    @classmethod
    def constant(cls, params: FiberParams, l_max: float) -> "DispersionMap":
        return cls(((0.0, l_max, params),))

    @classmethod
    def alternating(
        cls,
        params: FiberParams,
        period: float,
        l_max: float,
        flip: tuple[str, ...] = ("beta2", "beta3"),
    ) -> "DispersionMap":
        """Flip the sign of the named coefficients every `period` metres."""
        segs = []
        z = 0.0
        sign = 1.0
        while z < l_max - 1e-9:
            z1 = min(z + period, l_max)
            p = params if sign > 0 else replace(
                params, **{name: -getattr(params, name) for name in flip}
            )
            segs.append((z, z1, p))
            z = z1
            sign = -sign
        return cls(tuple(segs))


_AVERAGED_FIELDS = ("alpha", "beta2", "beta3", "gamma", "s_steep", "t_raman")


def average_params(dmap: DispersionMap, z0: float, z1: float) -> FiberParams:
    """Length-weighted mean of every coefficient over [z0, z1] (exact
    piecewise-constant integrals).  An interval inside a single segment
    returns that segment's params unchanged."""
    if not (0.0 <= z0 < z1):
        raise ValueError("need 0 <= z0 < z1")
    if z1 > dmap.l_max * (1.0 + 1e-12):
        raise ValueError("interval outside map coverage")
    overlapping = [
        (max(z0, a), min(z1, b), p)
        for a, b, p in dmap.segments
        if b > z0 and a < z1
    ]
    if len(overlapping) == 1:
        return overlapping[0][2]
    total = z1 - z0
    acc = {name: 0.0 for name in _AVERAGED_FIELDS}
    for a, b, p in overlapping:
        w = (b - a) / total
        for name in _AVERAGED_FIELDS:
            acc[name] += w * getattr(p, name)
    return FiberParams(lambda0=overlapping[0][2].lambda0, **acc)


@dataclass
class SimConfig:
    grid: SimGrid
    h: float  # m
    m_steps: int
    l_max: float  # m
    scheme: Scheme = Scheme.MUSCL_VAN_ALBADA

    def __post_init__(self):
        if self.h <= 0 or self.m_steps < 0:
            raise ValueError("h must be positive and m_steps non-negative")
        if self.m_steps and abs(self.m_steps * self.h - self.l_max) > 1e-9 * max(
            self.l_max, 1.0
        ):
            raise ValueError("m_steps * h must equal l_max")


@dataclass
class StepDiagnostics:
    z: float
    peak: float
    energy: float
    substeps: int


class _PlanCache:
    """Linear plans keyed by averaged coefficients; rebuilt only on change."""

    def __init__(self):
        self._plans: dict[tuple, LinearHalfStepPlan] = {}

    def get(self, grid: SimGrid, p: FiberParams, h: float, delta: float):
        key = (p.alpha, p.beta2, p.beta3, delta, h)
        plan = self._plans.get(key)
        if plan is None:
            plan = build_plan(grid, p.alpha, p.beta2, p.beta3, h, delta=delta)
            self._plans[key] = plan
        return plan


def ssfm_step_single(
    a: ComplexEnvelope,
    dmap: DispersionMap,
    z: float,
    h: float,
    scheme: Scheme,
    cache: _PlanCache | None = None,
) -> tuple[ComplexEnvelope, int]:
    """One symmetric split step: linear h/2, nonlinear h, linear h/2.

    Linear halves use coefficients averaged over [z, z+h/2] and
    [z+h/2, z+h]; the nonlinear middle uses the average over [z, z+h]."""
    cache = cache or _PlanCache()
    dt = a.grid.dt
    p_first = average_params(dmap, z, z + h / 2.0)
    p_mid = average_params(dmap, z, z + h)
    p_last = average_params(dmap, z + h / 2.0, z + h)
    a = apply_linear_half_step(a, cache.get(a.grid, p_first, h, 0.0))
    nl = NonlinearStepParams(
        gamma=p_mid.gamma, s_steep=p_mid.s_steep, t_raman=p_mid.t_raman, scheme=scheme
    )
    a, k = nonlinear_operator_apply_counted(a, nl, h, dt)
    a = apply_linear_half_step(a, cache.get(a.grid, p_last, h, 0.0))
    return a, k


def propagate(
    a0: ComplexEnvelope,
    cfg: SimConfig,
    dmap: DispersionMap,
    diagnostics_every: int = 1,
) -> tuple[ComplexEnvelope, list[StepDiagnostics]]:
    """Apply cfg.m_steps split steps; optionally record per-step diagnostics."""
    a = a0.copy()
    cache = _PlanCache()
    diag: list[StepDiagnostics] = []
    dt = a.grid.dt
    for m in range(cfg.m_steps):
        z = m * cfg.h
        a, k = ssfm_step_single(a, dmap, z, cfg.h, cfg.scheme, cache)
        if diagnostics_every and (m + 1) % diagnostics_every == 0:
            intensity = a.intensity()
            diag.append(
                StepDiagnostics(
                    z=z + cfg.h,
                    peak=float(np.max(intensity)),
                    energy=float(np.sum(intensity) * dt),
                    substeps=k,
                )
            )
    return a, diag


def ssfm_step_two_mode(
    fields: tuple[ComplexEnvelope, ComplexEnvelope],
    params: TwoModeParams,
    maps: tuple[DispersionMap, DispersionMap],
    z: float,
    h: float,
    scheme: Scheme,
    cache: _PlanCache | None = None,
) -> tuple[tuple[ComplexEnvelope, ComplexEnvelope], int]:
    """One symmetric two-mode split step; field 2's linear plan carries the
    group-velocity mismatch delta."""
    cache = cache or _PlanCache()
    a1, a2 = fields
    dt = a1.grid.dt
    deltas = (0.0, params.delta)
    firsts = [average_params(m, z, z + h / 2.0) for m in maps]
    mids = [average_params(m, z, z + h) for m in maps]
    lasts = [average_params(m, z + h / 2.0, z + h) for m in maps]

    a1 = apply_linear_half_step(a1, cache.get(a1.grid, firsts[0], h, deltas[0]))
    a2 = apply_linear_half_step(a2, cache.get(a2.grid, firsts[1], h, deltas[1]))

    state = TwoModePolar((madelung_forward(a1), madelung_forward(a2)))
    step_params = replace(params, mode=(mids[0], mids[1]))
    state, k = coupled_nonlinear_apply_counted(state, step_params, h, dt, scheme)
    a1 = madelung_inverse(state.field[0], a1.grid)
    a2 = madelung_inverse(state.field[1], a2.grid)

    a1 = apply_linear_half_step(a1, cache.get(a1.grid, lasts[0], h, deltas[0]))
    a2 = apply_linear_half_step(a2, cache.get(a2.grid, lasts[1], h, deltas[1]))
    return (a1, a2), k


def propagate_two_mode(
    fields0: tuple[ComplexEnvelope, ComplexEnvelope],
    params: TwoModeParams,
    cfg: SimConfig,
    maps: tuple[DispersionMap, DispersionMap] | None = None,
    diagnostics_every: int = 1,
) -> tuple[
    tuple[ComplexEnvelope, ComplexEnvelope],
    tuple[list[StepDiagnostics], list[StepDiagnostics]],
]:
    if maps is None:
        maps = (
            DispersionMap.constant(params.mode[0], cfg.l_max),
            DispersionMap.constant(params.mode[1], cfg.l_max),
        )
    a = (fields0[0].copy(), fields0[1].copy())
    cache = _PlanCache()
    diag: tuple[list[StepDiagnostics], list[StepDiagnostics]] = ([], [])
    dt = a[0].grid.dt
    for m in range(cfg.m_steps):
        z = m * cfg.h
        a, k = ssfm_step_two_mode(a, params, maps, z, cfg.h, cfg.scheme, cache)
        if diagnostics_every and (m + 1) % diagnostics_every == 0:
            for i in range(2):
                intensity = a[i].intensity()
                diag[i].append(
                    StepDiagnostics(
                        z=z + cfg.h,
                        peak=float(np.max(intensity)),
                        energy=float(np.sum(intensity) * dt),
                        substeps=k,
                    )
                )
    return a, diag
