"""Core data types: temporal grid, complex field envelope, Madelung representation.

Canonical internal units throughout the package: time in ps, distance in m,
power in W.  The envelope samples carry units of sqrt(W) so that |A|^2 is
instantaneous power.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SPEED_OF_LIGHT = 299_792_458.0  # m/s


def steepening_time(wavelength_m: float) -> float:
    """Self-steepening time scale 1/omega_0 = lambda0/(2 pi c), in ps."""
    if wavelength_m <= 0:
        raise ValueError("wavelength must be positive")
    return wavelength_m / (2.0 * np.pi * SPEED_OF_LIGHT) * 1e12


@dataclass(frozen=True)
class SimGrid:
    """Uniform temporal window [-N dt, (N-1) dt] with 2N samples."""

    n_half: int
    dt: float  # ps
    t_min: float  # ps

    def __post_init__(self):
        if self.n_half < 2:
            raise ValueError("n_half must be at least 2")
        if self.dt <= 0:
            raise ValueError("dt must be positive")

    @property
    def size(self) -> int:
        return 2 * self.n_half

    @property
    def delta_omega(self) -> float:
        """Spectral spacing pi/(N dt), rad/ps."""
        return np.pi / (self.n_half * self.dt)

    def times(self) -> np.ndarray:
        """Sample times T_j = j dt for j = -N ... N-1, in ps."""
        return self.t_min + self.dt * np.arange(self.size)

    def omegas(self) -> np.ndarray:
        """Angular frequencies {j delta_omega : -N <= j <= N-1} in DFT bin order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.size, d=self.dt)

    def compatible(self, other: "SimGrid") -> bool:
        return (
            self.n_half == other.n_half
            and self.dt == other.dt
            and self.t_min == other.t_min
        )


def make_grid(n_half: int, window_halfwidth: float) -> SimGrid:
    """Grid over [-window_halfwidth, window_halfwidth - dt] with 2*n_half points."""
    if n_half < 2:
        raise ValueError("n_half must be at least 2")
    if window_halfwidth <= 0:
        raise ValueError("window_halfwidth must be positive")
    dt = window_halfwidth / n_half
    return SimGrid(n_half=int(n_half), dt=dt, t_min=-window_halfwidth)


@dataclass
class ComplexEnvelope:
    """Sampled complex field envelope A over a SimGrid, units sqrt(W)."""

    grid: SimGrid
    samples: np.ndarray

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.complex128)
        if self.samples.shape != (self.grid.size,):
            raise ValueError(
                f"expected {self.grid.size} samples, got {self.samples.shape}"
            )

    def intensity(self) -> np.ndarray:
        return np.abs(self.samples) ** 2

    def copy(self) -> "ComplexEnvelope":
        return ComplexEnvelope(self.grid, self.samples.copy())


@dataclass
class PolarState:
    """Madelung representation: intensity I = |A|^2 (W) and phase phi = arg A (rad)."""

    intensity: np.ndarray
    phase: np.ndarray

    def __post_init__(self):
        self.intensity = np.asarray(self.intensity, dtype=np.float64)
        self.phase = np.asarray(self.phase, dtype=np.float64)
        if self.intensity.shape != self.phase.shape:
            raise ValueError("intensity and phase must have equal shape")

    def copy(self) -> "PolarState":
        return PolarState(self.intensity.copy(), self.phase.copy())


@dataclass(frozen=True)
class FiberParams:
    """Physical fiber coefficients in canonical units.

    alpha: linear loss, 1/m
    beta2: second-order dispersion, ps^2/m
    beta3: third-order dispersion, ps^3/m
    gamma: nonlinearity, 1/(W m)
    s_steep: self-steepening time 1/omega_0, ps
    t_raman: Raman response time, ps
    lambda0: carrier wavelength, m (only used to derive s_steep)
    """

    alpha: float = 0.0
    beta2: float = 0.0
    beta3: float = 0.0
    gamma: float = 0.0
    s_steep: float = 0.0
    t_raman: float = 0.0
    lambda0: float = 0.0

    def __post_init__(self):
        if self.s_steep < 0:
            raise ValueError("s_steep must be non-negative")
        if self.t_raman < 0:
            raise ValueError("t_raman must be non-negative")

    @classmethod
    def from_wavelength(
        cls,
        wavelength_m: float,
        *,
        alpha: float = 0.0,
        beta2: float = 0.0,
        beta3: float = 0.0,
        gamma: float = 0.0,
        t_raman: float = 0.0,
    ) -> "FiberParams":
        return cls(
            alpha=alpha,
            beta2=beta2,
            beta3=beta3,
            gamma=gamma,
            s_steep=steepening_time(wavelength_m),
            t_raman=t_raman,
            lambda0=wavelength_m,
        )


@dataclass(frozen=True)
class TwoModeParams:
    """Coefficients for two coupled fields.

    The group-velocity mismatch delta (ps/m) applies only to field 2's linear
    operator; field 1 defines the retarded frame.  b_xpm holds the cross-phase
    factors for the steepening/Raman terms, c_xpm those for the Kerr term.
    """

    mode: tuple[FiberParams, FiberParams]
    delta: float = 0.0
    b_xpm: tuple[float, float] = (0.0, 0.0)
    c_xpm: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if any(b < 0 for b in self.b_xpm) or any(c < 0 for c in self.c_xpm):
            raise ValueError("cross-phase factors must be non-negative")


def gaussian_pulse(
    grid: SimGrid, p0: float, t0: float, chirp: float = 0.0
) -> ComplexEnvelope:
    """Gaussian A(0,T) = sqrt(p0) exp(-(1+iC)/2 * T^2/t0^2)."""
    if p0 < 0:
        raise ValueError("p0 must be non-negative")
    if t0 <= 0:
        raise ValueError("t0 must be positive")
    t = grid.times()
    samples = np.sqrt(p0) * np.exp(-(1.0 + 1j * chirp) / 2.0 * (t / t0) ** 2)
    return ComplexEnvelope(grid, samples)


def madelung_forward(a: ComplexEnvelope) -> PolarState:
    """I = |A|^2, phi = arg A in (-pi, pi]; phi = 0 at zero-amplitude samples."""
    return PolarState(np.abs(a.samples) ** 2, np.angle(a.samples))


def madelung_inverse(p: PolarState, grid: SimGrid) -> ComplexEnvelope:
    """A = sqrt(I) exp(i phi)."""
    if np.any(p.intensity < 0):
        raise ValueError("intensity must be non-negative")
    return ComplexEnvelope(grid, np.sqrt(p.intensity) * np.exp(1j * p.phase))
