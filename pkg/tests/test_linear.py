import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiberssfm.analysis import pulse_energy
from fiberssfm.grid import ComplexEnvelope, gaussian_pulse, make_grid
from fiberssfm.linear import apply_linear_half_step, build_plan


def _random_envelope(seed, g):
    rng = np.random.default_rng(seed)
    return ComplexEnvelope(
        g, rng.standard_normal(g.size) + 1j * rng.standard_normal(g.size)
    )


def test_identity_for_zero_coefficients():
    g = make_grid(64, 4.0)
    a = _random_envelope(0, g)
    out = apply_linear_half_step(a, build_plan(g, 0.0, 0.0, 0.0, 1.0))
    np.testing.assert_allclose(out.samples, a.samples, atol=1e-14)


def test_analytic_gaussian_dispersion():
    """beta2-only propagation of a Gaussian has the closed form
    A(z,T) = sqrt(P0) T0 / sqrt(T0^2 - i beta2 z) exp(-T^2 / (2 (T0^2 - i beta2 z)))."""
    g = make_grid(2048, 20.0)
    p0, t0, beta2, z = 1.0, 0.1, 5e-4, 50.0
    a = gaussian_pulse(g, p0, t0)
    # one half-step of a plan built for h = 2z covers distance z
    out = apply_linear_half_step(a, build_plan(g, 0.0, beta2, 0.0, 2 * z))
    tau = t0**2 - 1j * beta2 * z
    expected = np.sqrt(p0) * t0 / np.sqrt(tau) * np.exp(-g.times() ** 2 / (2 * tau))
    np.testing.assert_allclose(out.samples, expected, atol=1e-10)
    # peak reduction sqrt(1 + (z/L_d)^2) with L_d = T0^2/beta2
    ld = t0**2 / beta2
    assert np.max(out.intensity()) == pytest.approx(
        p0 / np.sqrt(1 + (z / ld) ** 2), rel=1e-8
    )


@settings(max_examples=60, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    beta2=st.floats(-1e-2, 1e-2),
    beta3=st.floats(-1e-3, 1e-3),
    delta=st.floats(-1e-3, 1e-3),
    h=st.floats(1e-3, 1e3),
)
def test_energy_conserved_without_loss(seed, beta2, beta3, delta, h):
    g = make_grid(32, 2.0)
    a = _random_envelope(seed, g)
    out = apply_linear_half_step(a, build_plan(g, 0.0, beta2, beta3, h, delta=delta))
    assert pulse_energy(out) == pytest.approx(pulse_energy(a), rel=1e-12)


def test_loss_scales_energy_exponentially():
    g = make_grid(64, 4.0)
    a = _random_envelope(1, g)
    alpha, h = 0.05, 3.0
    out = apply_linear_half_step(a, build_plan(g, alpha, 1e-3, 0.0, h))
    assert pulse_energy(out) == pytest.approx(
        pulse_energy(a) * np.exp(-alpha * h / 2), rel=1e-12
    )


def test_delta_translates_toward_earlier_times():
    """delta > 0 shifts the field by -delta * (h/2); choose an exact
    integer-sample shift so the result is a plain roll."""
    g = make_grid(64, 4.0)
    a = _random_envelope(2, g)
    shift_samples = 5
    h = 2 * shift_samples * g.dt / 1.0  # delta = 1 ps/m
    out = apply_linear_half_step(a, build_plan(g, 0.0, 0.0, 0.0, h, delta=1.0))
    np.testing.assert_allclose(
        out.samples, np.roll(a.samples, -shift_samples), atol=1e-12
    )


def test_half_steps_compose():
    g = make_grid(64, 4.0)
    a = _random_envelope(3, g)
    plan_h = build_plan(g, 0.02, 2e-3, 1e-4, 10.0, delta=1e-3)
    plan_2h = build_plan(g, 0.02, 2e-3, 1e-4, 20.0, delta=1e-3)
    twice = apply_linear_half_step(apply_linear_half_step(a, plan_h), plan_h)
    once = apply_linear_half_step(a, plan_2h)
    np.testing.assert_allclose(twice.samples, once.samples, rtol=1e-12, atol=1e-14)


def test_operator_is_linear():
    g = make_grid(32, 2.0)
    a = _random_envelope(4, g)
    b = _random_envelope(5, g)
    plan = build_plan(g, 0.0, 1e-3, 1e-4, 7.0)
    combined = apply_linear_half_step(
        ComplexEnvelope(g, 2.0 * a.samples + 3j * b.samples), plan
    )
    parts = (
        2.0 * apply_linear_half_step(a, plan).samples
        + 3j * apply_linear_half_step(b, plan).samples
    )
    np.testing.assert_allclose(combined.samples, parts, rtol=1e-12, atol=1e-14)


def test_plan_grid_mismatch_raises():
    plan = build_plan(make_grid(32, 2.0), 0.0, 1e-3, 0.0, 1.0)
    other = _random_envelope(6, make_grid(64, 2.0))
    with pytest.raises(ValueError):
        apply_linear_half_step(other, plan)


def test_build_plan_rejects_nonpositive_h():
    with pytest.raises(ValueError):
        build_plan(make_grid(8, 1.0), 0.0, 0.0, 0.0, 0.0)
