"""Acceptance gate: the eight headline criteria, each printing one
[PASS]/[FAIL] line with the measured value and its stated tolerance.

The convergence criteria substitute nested finest-rung references for the
very large reference resolutions of the original study, as the refinement
protocol allows.
"""

import time

import numpy as np
import pytest

import oracles
from fiberssfm import benchmarks
from fiberssfm.analysis import pulse_energy
from fiberssfm.grid import ComplexEnvelope, PolarState, make_grid, madelung_forward, madelung_inverse
from fiberssfm.linear import apply_linear_half_step, build_plan
from fiberssfm.nonlinear_single import (
    NonlinearStepParams,
    Scheme,
    cfl_substep_count,
    muscl_step,
    nonlinear_operator_apply,
    phase_delta,
    upwind_first_order_step,
)


def _report(capsys, name, value, expected, passed, seconds=None):
    status = "PASS" if passed else "FAIL"
    timing = f"  [{seconds:.1f} s]" if seconds is not None else ""
    with capsys.disabled():
        print(f"[{status}] {name}: {value} (expected {expected}){timing}")
    return passed


@pytest.fixture(scope="module")
def benchmark1_results():
    t0 = time.perf_counter()
    rows = benchmarks.evaluate_benchmark1()
    return rows, time.perf_counter() - t0


@pytest.fixture(scope="module")
def benchmark3_results():
    t0 = time.perf_counter()
    rows = benchmarks.evaluate_benchmark3()
    return rows, time.perf_counter() - t0


def test_criterion_1_benchmark1_peak_reduction(benchmark1_results, capsys):
    rows, elapsed = benchmark1_results
    row = rows[0]
    assert row.name == "peak power reduction factor"
    ok = _report(
        capsys,
        "criterion 1 - benchmark 1 peak power reduction factor",
        f"{row.value:.4f}",
        "13.9 +- 3%",
        row.passed,
        elapsed,
    )
    assert ok, (
        "measured reduction factor sits ~3.2% below the published 13.9; an "
        "independent spectral quadrature of the linear problem confirms the "
        "solver value (see decisions ledger)"
    )


def test_criterion_2_benchmark1_convergence_order(capsys):
    t0 = time.perf_counter()
    lad, order = benchmarks.benchmark1_convergence(doublings=4, ref_factor=4)
    elapsed = time.perf_counter() - t0
    ok = _report(
        capsys,
        "criterion 2 - benchmark 1 fitted convergence order",
        f"{order:.3f}",
        "[1.8, 2.2]",
        1.8 <= order <= 2.2,
        elapsed,
    )
    assert ok, (
        "coarse-rung errors are dominated by a narrowband split-step "
        "resonance (error-spectrum spike scaling as 1/sqrt(h)) that decays "
        "super-polynomially once it leaves the pulse bandwidth, breaking the "
        "log-log fit; the finest rung pair measures ~2.2 (see decisions "
        "ledger)"
    )


def test_criterion_3_derived_length_scales(benchmark1_results, capsys):
    rows, _ = benchmark1_results
    ld, ld3, lnl = rows[1], rows[2], rows[3]
    ok = _report(
        capsys,
        "criterion 3 - derived length scales (L_d, L_d3, L_nl) [m]",
        f"{ld.value:.6g}, {ld3.value:.6g}, {lnl.value:.6g}",
        "12.8, ~7.31, 16000",
        ld.passed and ld3.passed and lnl.passed,
    )
    assert ok


def test_criterion_4_benchmark2_dispersion_management(capsys):
    t0 = time.perf_counter()
    period_rows = benchmarks.evaluate_benchmark2()
    recovery_rows = benchmarks.evaluate_benchmark2(gamma_zero=True)
    elapsed = time.perf_counter() - t0
    period, recovery = period_rows[0], recovery_rows[0]
    ok = _report(
        capsys,
        "criterion 4 - benchmark 2 oscillation period [m] / gamma=0 recovery error",
        f"{period.value:.1f} / {recovery.value:.3g}",
        "4000 +- 40 / < 1e-8",
        period.passed and recovery.passed,
        elapsed,
    )
    assert ok


def test_criterion_5_benchmark3_single_field_reduction(benchmark3_results, capsys):
    rows, elapsed = benchmark3_results
    row = rows[0]
    assert row.name.startswith("single-field reduction")
    ok = _report(
        capsys,
        "criterion 5 - benchmark 3 dark-partner reduction error [W]",
        f"{row.value:.3g}",
        "< 1e-12",
        row.passed,
        elapsed,
    )
    assert ok


def test_criterion_6_benchmark3_convergence_orders(capsys):
    t0 = time.perf_counter()
    results = benchmarks.benchmark3_convergence(doublings=4)
    elapsed = time.perf_counter() - t0
    coupled = [results["coupled pulse 1"][1], results["coupled pulse 2"][1]]
    single = [results["single pulse 1"][1], results["single pulse 2"][1]]
    coupled_ok = all(1.3 <= o <= 1.7 for o in coupled)
    single_ok = all(1.9 <= o <= 2.4 for o in single)
    ok = _report(
        capsys,
        "criterion 6 - benchmark 3 fitted orders coupled / single-pulse",
        f"{coupled[0]:.2f}, {coupled[1]:.2f} / {single[0]:.2f}, {single[1]:.2f}",
        "[1.3, 1.7] / [1.9, 2.4]",
        coupled_ok and single_ok,
        elapsed,
    )
    assert ok


def test_criterion_7_benchmark3_kinematics(benchmark3_results, capsys):
    rows, _ = benchmark3_results
    row = rows[1]
    assert row.name.startswith("pulse 2 centroid shift")
    ok = _report(
        capsys,
        "criterion 7 - benchmark 3 pulse 2 centroid shift [ps]",
        f"{row.value:.4f}",
        "-1.00 +- 0.02",
        row.passed,
    )
    assert ok, (
        "the kinematic shift is exact (-1.0 ps to 14 digits with gamma=0) "
        "but the delta=0 control run keeps the pulses overlapped for the "
        "whole link, so differential XPM-steepening drift (~ -0.22 ps) "
        "contaminates the centroid comparison at these powers (see "
        "decisions ledger)"
    )


# ------------------------------------------------------------ criterion 8


def _madelung_roundtrip_property():
    rng = np.random.default_rng(0)
    g = make_grid(32, 2.0)
    worst = 0.0
    for _ in range(50):
        a = ComplexEnvelope(
            g,
            rng.uniform(0.1, 10.0, g.size)
            * np.exp(1j * rng.uniform(-np.pi, np.pi, g.size)),
        )
        back = madelung_inverse(madelung_forward(a), g)
        worst = max(worst, float(np.max(np.abs(back.samples - a.samples) / np.abs(a.samples))))
    return worst, worst <= 1e-13


def _linear_energy_property():
    rng = np.random.default_rng(1)
    g = make_grid(32, 2.0)
    worst = 0.0
    for _ in range(50):
        a = ComplexEnvelope(g, rng.standard_normal(g.size) + 1j * rng.standard_normal(g.size))
        plan = build_plan(
            g,
            0.0,
            rng.uniform(-1e-2, 1e-2),
            rng.uniform(-1e-3, 1e-3),
            rng.uniform(1e-2, 1e2),
            delta=rng.uniform(-1e-3, 1e-3),
        )
        out = apply_linear_half_step(a, plan)
        worst = max(worst, abs(pulse_energy(out) - pulse_energy(a)) / pulse_energy(a))
    return worst, worst <= 1e-12


def _kerr_property():
    rng = np.random.default_rng(2)
    g = make_grid(32, 2.0)
    a = ComplexEnvelope(
        g, rng.uniform(0.2, 1.0, g.size) * np.exp(1j * rng.uniform(-3, 3, g.size))
    )
    worst = 0.0
    for scheme in Scheme:
        params = NonlinearStepParams(gamma=0.8, s_steep=0.0, t_raman=0.0, scheme=scheme)
        out = nonlinear_operator_apply(a, params, 2.5, g.dt)
        expected = a.samples * np.exp(1j * 0.8 * np.abs(a.samples) ** 2 * 2.5)
        worst = max(worst, float(np.max(np.abs(out.samples - expected) / np.abs(expected))))
    return worst, worst <= 1e-13


def _monotonicity_property():
    rng = np.random.default_rng(3)
    overshoot = 0.0
    for i in range(200):
        state = PolarState(rng.uniform(0, 1, 16), rng.uniform(-np.pi, np.pi, 16))
        gamma = 0.5 if i % 2 == 0 else -0.5
        params = NonlinearStepParams(gamma=gamma, s_steep=0.4, t_raman=0.02)
        dz = 0.9 * 0.05 / (3 * abs(gamma) * 0.4 * np.max(state.intensity))
        out = upwind_first_order_step(state, params, dz, 0.05, include_source=False)
        overshoot = max(
            overshoot,
            float(np.max(out.intensity) - np.max(state.intensity)),
            float(np.min(state.intensity) - np.min(out.intensity)),
        )
    return overshoot, overshoot <= 1e-12


def _phase_delta_property():
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(500):
        a, b = rng.uniform(-50, 50, 2)
        worst = max(worst, abs(phase_delta(a, b)) - np.pi)
    full_turn = max(
        abs(phase_delta(phi, phi + 2 * np.pi)) for phi in rng.uniform(-3, 3, 100)
    )
    return max(worst, full_turn), worst <= 1e-12 and full_turn <= 1e-12


def _cfl_property():
    rng = np.random.default_rng(5)
    ok = True
    for _ in range(200):
        gamma = rng.uniform(1e-3, 10)
        s = rng.uniform(1e-4, 1)
        i_max = rng.uniform(1e-6, 100)
        h = rng.uniform(1e-3, 100)
        dt = rng.uniform(1e-3, 1)
        params = NonlinearStepParams(gamma=gamma, s_steep=s, t_raman=0.0)
        k = cfl_substep_count(params, i_max, h, dt)
        ratio = 3 * gamma * s * i_max * h / dt
        ok = ok and ratio / k <= 1 + 1e-12 and (k == 1 or ratio / (k - 1) > 1)
    return int(not ok), ok


def _oracle_property():
    rng = np.random.default_rng(6)
    worst = 0.0
    from fiberssfm.nonlinear_twomode import single_field_step
    from fiberssfm.grid import FiberParams

    for i in range(30):
        I = rng.uniform(0, 1, 8)
        phi = rng.uniform(-np.pi, np.pi, 8)
        other = rng.uniform(0, 1, 8)
        gamma = 0.7 if i % 2 == 0 else -0.4
        s, tr, dt = 0.3, 0.05, 0.05
        b, c = (0.0, 0.0) if i % 3 == 0 else (2.0, 2.0)
        dz = 0.8 * dt / (abs(gamma) * s * np.max(3 * I + b * other))
        state = PolarState(I, phi)
        fp = FiberParams(gamma=gamma, s_steep=s, t_raman=tr)
        for scheme, oracle in (
            (Scheme.FIRST_ORDER_UPWIND, oracles.upwind_oracle),
            (Scheme.MUSCL_VAN_ALBADA, oracles.muscl_oracle),
        ):
            out = single_field_step(state, other, fp, b, c, dz, dt, scheme)
            ei, ep = oracle(I, phi, other, gamma, s, tr, b, c, dz, dt)
            scale = max(np.max(np.abs(ei)), np.max(np.abs(ep)), 1e-30)
            worst = max(
                worst,
                float(np.max(np.abs(out.intensity - ei))) / scale,
                float(np.max(np.abs(out.phase - ep))) / scale,
            )
    return worst, worst <= 1e-13


def test_criterion_8_property_suites(capsys):
    checks = [
        ("8a Madelung roundtrip relative error", "<= 1e-13", _madelung_roundtrip_property),
        ("8b linear-step energy conservation (alpha=0)", "<= 1e-12", _linear_energy_property),
        ("8c Kerr reduction relative error", "<= 1e-13", _kerr_property),
        ("8d upwind monotonicity overshoot", "<= 1e-12", _monotonicity_property),
        ("8e phase_delta bound / full-turn residual", "<= 1e-12", _phase_delta_property),
        ("8f CFL substepper minimality violations", "0", _cfl_property),
        ("8g scheme-vs-oracle relative error", "<= 1e-13", _oracle_property),
    ]
    all_ok = True
    for name, expected, fn in checks:
        value, passed = fn()
        _report(capsys, f"criterion {name}", f"{value:.3g}", expected, passed)
        all_ok = all_ok and passed
    assert all_ok
