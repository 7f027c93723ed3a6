import cmath
import math
import random

import pytest

from qstlattice import (
    LatticePoint,
    NATURAL_UNITS,
    QstWave,
    WaveSpec,
    advance_space,
    advance_time,
    continuum_plane_wave,
    continuum_superposition,
    from_log_polar,
    make_params,
    params_from_products,
    qst_plane_wave,
    qst_plane_wave_log,
    space_factor,
    space_factor_log,
    space_roots,
    step_space_recursion,
    step_time_recursion,
    time_factor,
    time_factor_log,
    time_ratio,
    wave_window,
)

UNIT = params_from_products(1.0, 1.0)  # k*lam = omega*tau = 1


def test_time_factor_examples():
    assert time_factor(UNIT, 1.0, 0) == 1
    assert time_factor(UNIT, 1.0, 1) == 1 - 1j
    assert time_factor(UNIT, 1.0, 2) == pytest.approx(-2j, rel=1e-15)


def test_space_factor_examples():
    spec = WaveSpec(a_amp=2.0, b_amp=3.0)
    assert space_factor(UNIT, spec, 0) == 5
    assert space_factor(UNIT, WaveSpec.right_mover(1.0), 2) == pytest.approx(2j, rel=1e-15)
    assert space_factor(UNIT, WaveSpec(a_amp=0.0, b_amp=1.0), 1) == 1 - 1j


def test_qst_plane_wave_examples():
    wave = QstWave(UNIT, WaveSpec.right_mover(1.0))
    assert qst_plane_wave(wave, LatticePoint(0, 0)) == 1
    assert qst_plane_wave(wave, LatticePoint(1, 1)) == pytest.approx(2 + 0j, rel=1e-15)
    assert qst_plane_wave(wave, LatticePoint(2, 1)) == pytest.approx(2 + 2j, rel=1e-15)


def test_continuum_plane_wave():
    params = make_params(NATURAL_UNITS, lam=1.0, energy=0.5)  # k = 1, omega = 0.5
    assert continuum_plane_wave(params, 2.5 - 1j, 0.0, 0.0) == 2.5 - 1j
    assert continuum_plane_wave(params, 1.0, math.pi, 0.0) == pytest.approx(-1.0 + 0j, abs=1e-15)
    rng = random.Random(1)
    for _ in range(50):
        value = continuum_plane_wave(params, 3 + 4j, rng.uniform(-9, 9), rng.uniform(-9, 9))
        assert abs(value) == pytest.approx(5.0, rel=1e-14)


def test_continuum_superposition_left_mover():
    params = make_params(NATURAL_UNITS, lam=1.0, energy=0.5)
    spec = WaveSpec(a_amp=0.0, b_amp=1.0)
    x, t = 0.7, 1.3
    want = cmath.exp(-1j * (params.k * x + params.omega * t))
    assert continuum_superposition(params, spec, x, t) == pytest.approx(want, rel=1e-14)


def test_step_time_recursion_examples():
    assert step_time_recursion(UNIT, 1.0) == 1 - 1j
    t = 1.0 + 0j
    for j in range(1, 6):
        t = step_time_recursion(UNIT, t)
        want = time_factor(UNIT, 1.0, j)
        assert abs(t - want) <= 1e-13 * abs(want)
    # degenerate product: omega*tau = 0 leaves the value unchanged
    assert advance_time(0.0, 2.5 - 1j) == 2.5 - 1j


def test_step_space_recursion_examples():
    # one step from the closed-form seeds at k*lam = 1, A=1, B=0
    u0, u1 = 1.0 + 0j, 1.0 + 1.0j
    assert step_space_recursion(UNIT, u0, u1) == pytest.approx(2j, rel=1e-15)
    # degenerate recurrence at k*lam = 0: two equal seeds stay constant
    assert advance_space(0.0, 1.0, 1.0) == 1.0


def test_space_recursion_reproduces_closed_form():
    """50 iterations from closed-form seeds track the closed form to 1e-10."""
    rng = random.Random(21)
    for _ in range(40):
        params = params_from_products(rng.uniform(1e-3, 1.0), rng.uniform(1e-3, 1.0))
        spec = WaveSpec(
            a_amp=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
            b_amp=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
        )
        u_prev = space_factor(params, spec, 0)
        u_curr = space_factor(params, spec, 1)
        for j in range(2, 52):
            u_prev, u_curr = u_curr, step_space_recursion(params, u_prev, u_curr)
            want = space_factor(params, spec, j)
            assert abs(u_curr - want) <= 1e-10 * abs(want)


def test_time_recursion_residual():
    """The closed-form time factor satisfies its one-step recursion on [-50, 50]."""
    rng = random.Random(22)
    for _ in range(25):
        params = params_from_products(1.0, rng.uniform(1e-3, 2.0))
        t0 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        for j in range(-50, 50):
            here = time_factor(params, t0, j)
            there = time_factor(params, t0, j + 1)
            residual = abs(there - step_time_recursion(params, here))
            assert residual <= 1e-12 * max(abs(here), abs(there))


def test_space_recursion_residual():
    """The closed-form space factor satisfies the three-term recursion on [-50, 50]."""
    rng = random.Random(23)
    for _ in range(25):
        params = params_from_products(rng.uniform(1e-3, 2.0), 1.0)
        spec = WaveSpec(
            a_amp=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
            b_amp=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
        )
        values = {j: space_factor(params, spec, j) for j in range(-50, 51)}
        for j in range(-50, 49):
            stencil = (values[j], values[j + 1], values[j + 2])
            residual = abs(stencil[2] - step_space_recursion(params, stencil[0], stencil[1]))
            assert residual <= 1e-12 * max(abs(v) for v in stencil)


def test_characteristic_roots():
    """1 +/- i k lam solve r^2 - 2r + (1 + k^2 lam^2) = 0."""
    rng = random.Random(24)
    for _ in range(100):
        k_lam = rng.uniform(1e-6, 2.0)
        coefficient = 1.0 + k_lam * k_lam
        for root in space_roots(k_lam):
            residual = abs(root * root - 2.0 * root + coefficient)
            assert residual <= 1e-14 * max(abs(root * root), 2.0 * abs(root), coefficient)


def test_time_factor_modulus_growth():
    """|T(j)|^2 = |t0|^2 (1 + omega^2 tau^2)^j."""
    rng = random.Random(25)
    for _ in range(100):
        omega_tau = rng.uniform(1e-3, 2.0)
        params = params_from_products(1.0, omega_tau)
        t0 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if t0 == 0:
            continue
        j = rng.randint(-80, 80)
        value = abs(time_factor(params, t0, j)) ** 2
        want = abs(t0) ** 2 * (1.0 + omega_tau * omega_tau) ** j
        assert value == pytest.approx(want, rel=1e-12)


def test_negative_indices_are_reciprocal_powers():
    params = params_from_products(0.8, 0.6)
    for j in (1, 2, 7, 33):
        forward = time_factor(params, 1.0, j)
        backward = time_factor(params, 1.0, -j)
        assert forward * backward == pytest.approx(1.0 + 0j, rel=1e-12)
        u_fwd = space_factor(params, WaveSpec.right_mover(1.0), j)
        u_bwd = space_factor(params, WaveSpec.right_mover(1.0), -j)
        assert u_fwd * u_bwd == pytest.approx(1.0 + 0j, rel=1e-12)


def test_log_variants_match_rectangular():
    rng = random.Random(26)
    for _ in range(50):
        params = params_from_products(rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0))
        spec = WaveSpec(
            a_amp=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
            b_amp=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
            t0=complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0,
        )
        wave = QstWave(params, spec)
        p = LatticePoint(rng.randint(-40, 40), rng.randint(-40, 40))
        rect = qst_plane_wave(wave, p)
        via_log = from_log_polar(qst_plane_wave_log(wave, p))
        assert via_log == pytest.approx(rect, rel=1e-10, abs=1e-12)
        t_rect = time_factor(params, spec.t0, p.j_t)
        assert from_log_polar(time_factor_log(params, spec.t0, p.j_t)) == pytest.approx(t_rect, rel=1e-11)
        u_rect = space_factor(params, spec, p.j_x)
        assert from_log_polar(space_factor_log(params, spec, p.j_x)) == pytest.approx(
            u_rect, rel=1e-10, abs=1e-12
        )


def test_time_ratio_and_wave_window():
    assert time_ratio(0.25) == 1 - 0.25j
    wave = QstWave(UNIT, WaveSpec.right_mover(2.0))
    window = wave_window(wave, -2, 2, j_t=1)
    assert window.origin == -2 and len(window) == 5
    for j, v in window.items():
        assert v == pytest.approx(qst_plane_wave(wave, LatticePoint(j, 1)), rel=1e-14)
