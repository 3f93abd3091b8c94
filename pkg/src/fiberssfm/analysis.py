"""Error norms, convergence-order fits, spectra and pulse metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import ComplexEnvelope, FiberParams, SimGrid


@dataclass(frozen=True)
class LadderRung:
    n_half: int
    h: float
    m_steps: int
    e_inf: float


@dataclass
class ConvergenceLadder:
    """Successive rungs halve h and double n_half; errors are against a
    common nested reference run."""

    rungs: list[LadderRung]
    reference: str = ""

    def orders(self) -> float:
        return convergence_order(self)


def error_maxnorm(
    candidate_intensity: np.ndarray,
    candidate_grid: SimGrid,
    reference_intensity: np.ndarray,
    reference_grid: SimGrid,
) -> float:
    """max_j |I_j - I_ref(j dT)| with the reference sampled by exact index
    mapping; requires nested grids over the same window."""
    if reference_grid.t_min != candidate_grid.t_min:
        raise ValueError("grids must share the same window")
    ratio = reference_grid.n_half / candidate_grid.n_half
    if ratio < 1 or ratio != int(ratio):
        raise ValueError("reference grid must be an integer refinement")
    ratio = int(ratio)
    ref = np.asarray(reference_intensity)[:: ratio]
    return float(np.max(np.abs(np.asarray(candidate_intensity) - ref)))


def convergence_order(ladder: ConvergenceLadder) -> float:
    """Least-squares slope of log E_inf versus log h."""
    if len(ladder.rungs) < 3:
        raise ValueError("need at least 3 rungs")
    e = np.array([r.e_inf for r in ladder.rungs])
    if np.any(e <= 0):
        raise ValueError("all errors must be positive")
    h = np.array([r.h for r in ladder.rungs])
    slope, _ = np.polyfit(np.log(h), np.log(e), 1)
    return float(slope)


def power_spectrum(
    a: ComplexEnvelope, normalization: str = "energy"
) -> tuple[np.ndarray, np.ndarray]:
    """(frequency offset from carrier in THz, spectral power), sorted by
    frequency.

    normalization="energy": sum of spectral power equals the time-domain
    pulse energy (Parseval).  normalization="peak": peak-normalized to 1 for
    figure-style comparison.
    """
    n = a.grid.size
    spec = np.abs(np.fft.fft(a.samples)) ** 2
    freq = np.fft.fftfreq(n, d=a.grid.dt)  # 1/ps = THz
    order = np.argsort(freq, kind="stable")
    freq, spec = freq[order], spec[order]
    if normalization == "energy":
        spec = spec * a.grid.dt / n
    elif normalization == "peak":
        peak = np.max(spec)
        if peak > 0:
            spec = spec / peak
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    return freq, spec


def peak_power(a: ComplexEnvelope) -> float:
    return float(np.max(a.intensity()))


def pulse_energy(a: ComplexEnvelope) -> float:
    return float(np.sum(a.intensity()) * a.grid.dt)


def centroid(a: ComplexEnvelope) -> float:
    """Intensity-weighted mean arrival time, ps."""
    intensity = a.intensity()
    total = np.sum(intensity)
    if total == 0:
        raise ValueError("centroid of a zero field is undefined")
    return float(np.sum(a.grid.times() * intensity) / total)


def dispersion_length(params: FiberParams, t0: float) -> float:
    """L_d = T0^2/|beta2|, m."""
    return t0**2 / abs(params.beta2)


def third_order_dispersion_length(params: FiberParams, t0: float) -> float:
    """T0^3/|beta3|, m."""
    return t0**3 / abs(params.beta3)


def nonlinear_length(params: FiberParams, p0: float) -> float:
    """L_nl = 1/(gamma P0), m."""
    return 1.0 / (params.gamma * p0)


def oscillation_period(z: np.ndarray, trace: np.ndarray) -> float:
    """Dominant oscillation period of a peak-power trace, in the units of z.

    A crest is the argmax of each contiguous run of samples at or above the
    midpoint of the trace's range; the period is the mean spacing between
    consecutive crests.  Thresholding makes the measurement insensitive to
    the sampling micro-ripple that a raw local-maximum count would pick up.
    """
    z = np.asarray(z, dtype=np.float64)
    trace = np.asarray(trace, dtype=np.float64)
    if z.shape != trace.shape or z.ndim != 1:
        raise ValueError("z and trace must be 1-d arrays of equal length")
    lo, hi = float(np.min(trace)), float(np.max(trace))
    if hi <= lo:
        raise ValueError("trace is constant; no oscillation to measure")
    above = trace >= lo + 0.5 * (hi - lo)
    edges = np.flatnonzero(np.diff(np.concatenate(([False], above, [False]))))
    crest_z = []
    for start, stop in zip(edges[::2], edges[1::2]):
        j = start + int(np.argmax(trace[start:stop]))
        crest_z.append(z[j])
    if len(crest_z) < 2:
        raise ValueError("trace has fewer than two crests")
    return float(np.mean(np.diff(crest_z)))
