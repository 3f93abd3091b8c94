"""Coupled two-mode nonlinear sub-operator.

Each field's (I_k, phi_k) is advanced by the single-field kernel of
nonlinear_single with the partner intensity I_l frozen in z; the two fields
are coupled through the symmetric fractional-step sequence

    field 1: h/2   ->   field 2: h   ->   field 1: h/2,

each sub-application seeing the partner state at its entry and substepping
internally against the two-mode CFL bound.

The full 4x4 advection matrix of the combined (I_1, phi_1, I_2, phi_2)
system is provided for verification only (advection_matrix_4d); it is never
solved unsplit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import FiberParams, PolarState, TwoModeParams
from .nonlinear_single import Scheme, _single_field_step, _substepped_apply


@dataclass
class TwoModePolar:
    """Madelung states of both fields on one grid."""

    field: tuple[PolarState, PolarState]

    def __post_init__(self):
        if self.field[0].intensity.shape != self.field[1].intensity.shape:
            raise ValueError("both fields must share one grid")

    def copy(self) -> "TwoModePolar":
        return TwoModePolar((self.field[0].copy(), self.field[1].copy()))


def cfl_substep_count_two_mode(
    k_params: FiberParams,
    b_k: float,
    own_intensity: np.ndarray,
    other_intensity: np.ndarray,
    h: float,
    dt: float,
) -> int:
    """Smallest k >= 1 with |gamma_k| S_k max{3 I_k + B_k I_l} (h/k)/dt <= 1."""
    ratio = (
        abs(k_params.gamma)
        * k_params.s_steep
        * np.max(3.0 * own_intensity + b_k * other_intensity)
        * h
        / dt
    )
    return max(1, math.ceil(ratio))


def single_field_step(
    own: PolarState,
    other_intensity: np.ndarray,
    k_params: FiberParams,
    b_k: float,
    c_k: float,
    dz: float,
    dt: float,
    scheme: Scheme,
) -> PolarState:
    """One scheme step of (I_k, phi_k) with I_l frozen; CFL must hold for dz."""
    I, phi = _single_field_step(
        own.intensity,
        own.phase,
        np.asarray(other_intensity, dtype=np.float64),
        k_params.gamma,
        k_params.s_steep,
        k_params.t_raman,
        b_k,
        c_k,
        dz,
        dt,
        scheme,
    )
    return PolarState(I, phi)


def coupled_nonlinear_apply(
    state: TwoModePolar, params: TwoModeParams, h: float, dt: float, scheme: Scheme
) -> TwoModePolar:
    out, _ = coupled_nonlinear_apply_counted(state, params, h, dt, scheme)
    return out


def coupled_nonlinear_apply_counted(
    state: TwoModePolar, params: TwoModeParams, h: float, dt: float, scheme: Scheme
) -> tuple[TwoModePolar, int]:
    """Symmetric fractional-step coupling; returns the largest substep count."""
    s1, s2 = state.field[0].copy(), state.field[1].copy()
    p1, p2 = params.mode
    k_max = 0

    def sub(own: PolarState, other: PolarState, fp: FiberParams, b, c, dz):
        nonlocal k_max
        I, phi, k = _substepped_apply(
            own.intensity,
            own.phase,
            other.intensity,
            fp.gamma,
            fp.s_steep,
            fp.t_raman,
            b,
            c,
            dz,
            dt,
            scheme,
        )
        k_max = max(k_max, k)
        return PolarState(I, phi)

    s1 = sub(s1, s2, p1, params.b_xpm[0], params.c_xpm[0], h / 2.0)
    s2 = sub(s2, s1, p2, params.b_xpm[1], params.c_xpm[1], h)
    s1 = sub(s1, s2, p1, params.b_xpm[0], params.c_xpm[0], h / 2.0)
    return TwoModePolar((s1, s2)), k_max


def advection_matrix_4d(
    u: np.ndarray, params: TwoModeParams
) -> np.ndarray:
    """4x4 coefficient matrix of the combined two-mode advection system at a
    single state u = (I1, phi1, I2, phi2).  Verification aid only."""
    i1, _, i2, _ = u
    p1, p2 = params.mode
    b1, b2 = params.b_xpm
    g1, s1, g2, s2 = p1.gamma, p1.s_steep, p2.gamma, p2.s_steep
    tr1, tr2 = p1.t_raman, p2.t_raman
    return np.array(
        [
            [g1 * s1 * (3 * i1 + b1 * i2), 0.0, 2 * g1 * s1 * b1 * i1, 0.0],
            [g1 * tr1, g1 * s1 * (i1 + b1 * i2), g1 * tr1 * b1, 0.0],
            [2 * g2 * s2 * b2 * i2, 0.0, g2 * s2 * (3 * i2 + b2 * i1), 0.0],
            [g2 * tr2 * b2, 0.0, g2 * tr2, g2 * s2 * (i2 + b2 * i1)],
        ]
    )
