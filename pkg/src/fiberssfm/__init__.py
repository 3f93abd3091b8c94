"""Split-step Fourier simulation of ultra-fast optical pulses with a
Madelung-transformed upwind/MUSCL nonlinear sub-operator."""

from .grid import (
    ComplexEnvelope,
    FiberParams,
    PolarState,
    SimGrid,
    TwoModeParams,
    gaussian_pulse,
    madelung_forward,
    madelung_inverse,
    make_grid,
)
from .linear import LinearHalfStepPlan, apply_linear_half_step, build_plan
from .nonlinear_single import (
    NonlinearStepParams,
    Scheme,
    cfl_substep_count,
    limiter_van_albada,
    muscl_step,
    nonlinear_operator_apply,
    phase_delta,
    upwind_first_order_step,
)
from .nonlinear_twomode import (
    TwoModePolar,
    cfl_substep_count_two_mode,
    coupled_nonlinear_apply,
    single_field_step,
)
from .propagator import (
    DispersionMap,
    SimConfig,
    average_params,
    propagate,
    propagate_two_mode,
    ssfm_step_single,
    ssfm_step_two_mode,
)

__version__ = "0.1.0"
