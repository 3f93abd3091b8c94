"""Independent scalar-loop oracles for the nonlinear update schemes.

These are deliberately naive, index-by-index transcriptions of the update
rules, written without reusing any of the vectorized implementation.  The
only policy shared with the library is the degenerate-slope convention:
the limited slope is zero whenever the adjacent differences do not share a
strict sign.
"""

from __future__ import annotations

import math

import numpy as np

TWO_PI = 2.0 * math.pi


def wrap_oracle(d: float) -> float:
    """Smallest-magnitude representative of d modulo 2*pi.

    Tie order: raw difference first, then +2*pi, then -2*pi.  Differences
    beyond a full turn are first reduced by whole turns toward zero.
    """
    d = d - TWO_PI * math.trunc(d / TWO_PI)
    candidates = (d, d + TWO_PI, d - TWO_PI)
    best = candidates[0]
    for c in candidates[1:]:
        if abs(c) < abs(best):
            best = c
    return best


def limiter_oracle(r: float) -> float:
    if math.isinf(r):
        return 1.0
    return max(0.0, (r * r + r) / (1.0 + r * r))


def slope_oracle(a: float, b: float) -> float:
    """Limited slope Phi(a/b)*b + Phi(b/a)*a, zero at extrema."""
    if a * b <= 0.0:
        return 0.0
    return limiter_oracle(a / b) * b + limiter_oracle(b / a) * a


def _neighbors(n: int, j: int, gamma: float) -> int:
    """Index of the upwind-side neighbor for sample j."""
    return (j - 1) % n if gamma > 0 else (j + 1) % n


def _signed(x_nb: float, x_j: float, gamma: float) -> float:
    """One-sided difference oriented the way the scheme takes it."""
    return x_j - x_nb if gamma > 0 else x_nb - x_j


def upwind_oracle(
    I, phi, other, gamma, s, tr, b, c, dz, dt, include_source=True
):
    """First-order upwind update of the (I, phi) advection system.

    The partner intensity `other` is a frozen coefficient field entering
    through the cross-phase weights b (steepening/Raman) and c (Kerr).
    Single-mode corresponds to b = c = 0, other = 0.
    """
    n = len(I)
    lam = dz / dt
    I_new = np.empty(n)
    phi_new = np.empty(n)
    for j in range(n):
        nb = _neighbors(n, j, gamma)
        dI = _signed(I[nb], I[j], gamma)
        dIl = _signed(other[nb], other[j], gamma)
        dph = wrap_oracle(_signed(phi[nb], phi[j], gamma))
        mI = 0.5 * (I[j] + I[nb])
        mIl = 0.5 * (other[j] + other[nb])
        I_new[j] = I[j] - lam * gamma * s * ((3.0 * mI + b * mIl) * dI + 2.0 * b * mI * dIl)
        phi_new[j] = phi[j] - lam * gamma * (
            tr * (dI + b * dIl) + s * (mI + b * mIl) * dph
        )
    if include_source:
        for j in range(n):
            phi_new[j] += dz * gamma * (I_new[j] + c * other[j])
    return I_new, phi_new


def muscl_oracle(I, phi, other, gamma, s, tr, b, c, dz, dt, include_source=True):
    """Slope-limited high-resolution update with symmetric source splitting.

    Structure: half source step for the phase, first-order half-step
    predictor, piecewise-linear reconstruction with the van Albada limiter,
    upwind corrector over the full step using interface edge values and the
    in-cell reconstruction difference, half source step.
    """
    n = len(I)
    lam = dz / dt
    phi = np.array(phi, dtype=float)
    if include_source:
        for j in range(n):
            phi[j] += 0.5 * dz * gamma * (I[j] + c * other[j])

    Ibar, phbar = upwind_oracle(
        I, phi, other, gamma, s, tr, b, c, 0.5 * dz, dt, include_source=False
    )

    sI = np.empty(n)
    sP = np.empty(n)
    for j in range(n):
        jm, jp = (j - 1) % n, (j + 1) % n
        sI[j] = slope_oracle(Ibar[j] - Ibar[jm], Ibar[jp] - Ibar[j])
        sP[j] = slope_oracle(
            wrap_oracle(phbar[j] - phbar[jm]), wrap_oracle(phbar[jp] - phbar[j])
        )

    I_new = np.empty(n)
    phi_new = np.empty(n)
    for j in range(n):
        nb = _neighbors(n, j, gamma)
        # reconstructed edge-value jump at the upwind interface; the phase
        # jump is measured from the raw predictor difference modulo 2*pi
        if gamma > 0:
            dI_int = (Ibar[j] - sI[j] / 4.0) - (Ibar[nb] + sI[nb] / 4.0)
        else:
            dI_int = (Ibar[nb] - sI[nb] / 4.0) - (Ibar[j] + sI[j] / 4.0)
        dP_int = wrap_oracle(_signed(phbar[nb], phbar[j], gamma)) - (sP[j] + sP[nb]) / 4.0
        dIl = _signed(other[nb], other[j], gamma)
        mI = 0.5 * (Ibar[j] + Ibar[nb])
        mIl = 0.5 * (other[j] + other[nb])
        dI_cell = sI[j] / 2.0
        dP_cell = sP[j] / 2.0
        I_new[j] = I[j] - lam * gamma * s * (
            (3.0 * mI + b * mIl) * dI_int
            + 2.0 * b * mI * dIl
            + (3.0 * Ibar[j] + b * other[j]) * dI_cell
        )
        phi_new[j] = phi[j] - lam * gamma * (
            tr * (dI_int + b * dIl)
            + s * (mI + b * mIl) * dP_int
            + tr * dI_cell
            + s * (Ibar[j] + b * other[j]) * dP_cell
        )
    if include_source:
        for j in range(n):
            phi_new[j] += 0.5 * dz * gamma * (I_new[j] + c * other[j])
    return I_new, phi_new


def cfl_count_oracle(gamma, s, i_eff_max, h, dt):
    """Smallest k >= 1 with |gamma| * s * i_eff_max * (h/k) / dt <= 1."""
    k = 1
    while abs(gamma) * s * i_eff_max * (h / k) / dt > 1.0:
        k += 1
    return k
