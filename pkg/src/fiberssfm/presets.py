"""Built-in benchmark configurations (YAML documents, overridable via CLI)."""

BENCHMARK_1 = """\
mode: single
scheme: muscl
grid:
  n_half: 2048
  window: "30 ps"
propagation:
  step: "10 m"
  steps: 100
pulses:
  - peak_power: "0.625 mW"
    half_width: "80 fs"
    chirp: 0.0
fibers:
  - alpha: "0 1/m"
    beta2: "0.5 ps^2/km"
    beta3: "0.07 ps^3/km"
    gamma: "0.1 1/(W m)"
    wavelength: "1550 nm"
    raman_time: "3 fs"
"""

BENCHMARK_2 = """\
mode: single
scheme: muscl
grid:
  n_half: 4096
  window: "30 ps"
propagation:
  step: "40 m"
  steps: 2500
pulses:
  - peak_power: "0.625 mW"
    half_width: "80 fs"
    chirp: 0.0
fibers:
  - alpha: "0 1/m"
    beta2: "0.5 ps^2/km"
    beta3: "0.07 ps^3/km"
    gamma: "0.1 1/(W m)"
    wavelength: "1550 nm"
    raman_time: "3 fs"
    alternating:
      period: "2 km"
      flip: [beta2, beta3]
"""

BENCHMARK_3 = """\
mode: two_mode
scheme: muscl
grid:
  n_half: 2048
  window: "4 ps"
propagation:
  step: "20 m"
  steps: 3200
pulses:
  - peak_power: "0.625 mW"
    half_width: "80 fs"
    chirp: 0.0
  - peak_power: "0.3125 mW"
    half_width: "80 fs"
    chirp: 0.0
fibers:
  - alpha: "0 1/m"
    beta2: "4e-5 ps^2/km"
    beta3: "0 ps^3/km"
    gamma: "1 1/(W m)"
    wavelength: "1550 nm"
    raman_time: "0 fs"
  - alpha: "0 1/m"
    beta2: "4e-5 ps^2/km"
    beta3: "0 ps^3/km"
    gamma: "1.2 1/(W m)"
    wavelength: "1300 nm"
    raman_time: "0 fs"
coupling:
  delta: "0.015625 fs/m"
  b: [2, 2]
  c: [2, 2]
"""

BENCHMARK_4 = """\
mode: two_mode
scheme: muscl
grid:
  n_half: 4096
  window: "30 ps"
propagation:
  step: "40 m"
  steps: 2500
pulses:
  - peak_power: "0.625 mW"
    half_width: "80 fs"
    chirp: 0.0
  - peak_power: "0.3125 mW"
    half_width: "80 fs"
    chirp: 0.0
fibers:
  - alpha: "0 1/m"
    beta2: "0.5 ps^2/km"
    beta3: "0.07 ps^3/km"
    gamma: "0.1 1/(W m)"
    wavelength: "1550 nm"
    raman_time: "3 fs"
    alternating:
      period: "2 km"
      flip: [beta2, beta3]
  - alpha: "0 1/m"
    beta2: "0.5 ps^2/km"
    beta3: "0.07 ps^3/km"
    gamma: "0.1 1/(W m)"
    wavelength: "1300 nm"
    raman_time: "3 fs"
    alternating:
      period: "2 km"
      flip: [beta2, beta3]
coupling:
  delta: "0.015625 fs/m"
  b: [2, 2]
  c: [2, 2]
"""

PRESETS = {1: BENCHMARK_1, 2: BENCHMARK_2, 3: BENCHMARK_3, 4: BENCHMARK_4}
