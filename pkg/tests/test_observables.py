import math
import random

import pytest

from qstlattice import (
    AmplitudeOverflowError,
    LatticePoint,
    NATURAL_UNITS,
    ObservableSample,
    PhysicalConstants,
    QstWave,
    UnsupportedWaveError,
    ValidationError,
    WaveSpec,
    continuity_residual,
    continuity_residual_log,
    density_continuum,
    density_qst,
    density_qst_log,
    energy_for_wavenumber,
    flux_continuum,
    flux_qst_closed,
    flux_qst_closed_log,
    flux_qst_from_definition,
    make_params,
    params_from_products,
    predicted_continuity_residual,
    qst_plane_wave,
    qst_plane_wave_log,
)

UNIT = params_from_products(1.0, 1.0)


def _right_wave(params, a_amp=1.0, t0=1.0):
    return QstWave(params, WaveSpec.right_mover(a_amp, t0))


def test_density_continuum_examples():
    assert density_continuum(1.0) == 1.0
    assert density_continuum(3 + 4j) == pytest.approx(25.0, rel=1e-15)
    assert density_continuum(0.0) == 0.0


def test_flux_continuum_examples():
    natural = make_params(NATURAL_UNITS, lam=1.0, energy=0.5)  # k = 1
    assert flux_continuum(natural, 1.0) == pytest.approx(1.0, rel=1e-15)
    assert flux_continuum(natural, 0.0) == 0.0
    constants = PhysicalConstants(hbar=1.0, mass=2.0, light_speed=1.0)
    params = make_params(constants, lam=0.3, energy=energy_for_wavenumber(constants, 3.0))
    assert flux_continuum(params, 1 + 1j) == pytest.approx(3.0, rel=1e-14)


def test_density_qst_examples():
    wave = _right_wave(UNIT)
    assert density_qst(wave, LatticePoint(0, 0)) == 1.0
    assert density_qst(wave, LatticePoint(2, 1)) == pytest.approx(8.0, rel=1e-15)
    assert density_qst(wave, LatticePoint(-1, 0)) == pytest.approx(0.5, rel=1e-15)


def test_right_mover_required():
    wave = QstWave(UNIT, WaveSpec(a_amp=1.0, b_amp=0.5))
    for fn in (density_qst, density_qst_log, flux_qst_from_definition):
        with pytest.raises(UnsupportedWaveError):
            fn(wave, LatticePoint(0, 0))


def test_flux_qst_closed_examples():
    wave = _right_wave(UNIT)
    assert flux_qst_closed(wave, LatticePoint(0, 0)) == pytest.approx(1.0, rel=1e-15)
    assert flux_qst_closed(wave, LatticePoint(1, 1)) == pytest.approx(4.0, rel=1e-15)


def test_flux_is_exactly_velocity_times_density():
    rng = random.Random(31)
    for _ in range(100):
        params = params_from_products(rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0))
        wave = _right_wave(params, complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0)
        p = LatticePoint(rng.randint(-60, 60), rng.randint(-60, 60))
        velocity = params.constants.hbar * params.k / params.constants.mass
        assert flux_qst_closed(wave, p) == velocity * density_qst(wave, p)


def test_flux_from_definition_matches_closed_form():
    """The Hermitian difference-quotient form reproduces the closed form at 200 random points."""
    rng = random.Random(32)
    for _ in range(200):
        params = params_from_products(rng.uniform(1e-3, 2.0), rng.uniform(1e-3, 2.0))
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0
        t0 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0
        wave = _right_wave(params, a, t0)
        p = LatticePoint(rng.randint(-50, 50), rng.randint(-50, 50))
        closed = flux_qst_closed(wave, p)
        definition = flux_qst_from_definition(wave, p)
        assert abs(definition - closed) <= 1e-12 * abs(closed)


def test_flux_vanishes_with_wavenumber():
    # constant-in-space wave: a vanishing k drives the flux to zero
    params = make_params(NATURAL_UNITS, lam=1.0, energy=1e-300)
    wave = _right_wave(params)
    assert abs(flux_qst_from_definition(wave, LatticePoint(3, 2))) < 1e-100


def test_hermitian_bracket_is_real():
    rng = random.Random(33)
    for _ in range(50):
        params = params_from_products(rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0))
        wave = _right_wave(params, complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0)
        p = LatticePoint(rng.randint(-30, 30), rng.randint(-30, 30))
        psi = qst_plane_wave(wave, p)
        psi_next = qst_plane_wave(wave, LatticePoint(p.j_x + 1, p.j_t))
        dpsi = (psi_next - psi) / params.lam
        bracket = psi.conjugate() * dpsi - dpsi.conjugate() * psi
        value = bracket / 1j
        assert abs(value.imag) <= 1e-13 * max(abs(value.real), 1e-30)


def test_density_matches_wave_modulus_squared():
    rng = random.Random(34)
    for _ in range(200):
        params = params_from_products(rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0))
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0
        t0 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0
        wave = _right_wave(params, a, t0)
        p = LatticePoint(rng.randint(-80, 80), rng.randint(-80, 80))
        direct = abs(qst_plane_wave(wave, p)) ** 2
        assert density_qst(wave, p) == pytest.approx(direct, rel=1e-12)


def test_log_density_is_twice_log_magnitude():
    wave = _right_wave(params_from_products(1.0, 1.0), 1.3 - 0.4j, 0.9 + 0.2j)
    for j_x in (2000, 10**4, 10**5, 10**6):
        for j_t in (0, 12345, 10**6):
            p = LatticePoint(j_x, j_t)
            log_density = density_qst_log(wave, p)
            log_mag = qst_plane_wave_log(wave, p).log_mag
            assert abs(log_density - 2.0 * log_mag) <= 1e-10


def test_rectangular_density_overflows_loudly():
    wave = _right_wave(params_from_products(1.0, 1.0))
    with pytest.raises(AmplitudeOverflowError):
        density_qst(wave, LatticePoint(10**6, 0))
    with pytest.raises(AmplitudeOverflowError):
        # two individually representable factors whose product is not
        density_qst(wave, LatticePoint(900, 900))


def test_monotonicity_property():
    """The density strictly increases in each index for positive growth parameters."""
    rng = random.Random(35)
    for _ in range(1000):
        params = params_from_products(rng.uniform(1e-3, 2.0), rng.uniform(1e-3, 2.0))
        a = complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0
        wave = _right_wave(params, a)
        j_x, j_t = rng.randint(-150, 150), rng.randint(-150, 150)
        here = density_qst(wave, LatticePoint(j_x, j_t))
        assert density_qst(wave, LatticePoint(j_x + 1, j_t)) > here
        assert density_qst(wave, LatticePoint(j_x, j_t + 1)) > here


def test_flux_log_pair():
    wave = _right_wave(params_from_products(1.0, 1.0))
    log_flux, sign = flux_qst_closed_log(wave, LatticePoint(1, 1))
    assert sign == 1.0
    assert log_flux == pytest.approx(math.log(4.0), rel=1e-14)
    zero_wave = _right_wave(params_from_products(1.0, 1.0), 1.0, 0.0)
    assert flux_qst_closed_log(zero_wave, LatticePoint(0, 0)) == (-math.inf, 0.0)


def test_continuity_residual_matches_prediction():
    """Direct differencing reproduces P * (omega^2 tau + hbar k^3 lam / m) to 1e-10."""
    rng = random.Random(36)
    for _ in range(200):
        lam = rng.uniform(0.05, 2.0)
        energy = rng.uniform(0.05, 2.0)
        params = make_params(NATURAL_UNITS, lam=lam, energy=energy)
        wave = _right_wave(params, complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) or 1.0)
        p = LatticePoint(rng.randint(-20, 20), rng.randint(-20, 20))
        direct = continuity_residual(wave, p)
        predicted = predicted_continuity_residual(wave, p)
        assert abs(direct - predicted) <= 1e-10 * abs(predicted)


def test_continuity_residual_vanishes_linearly():
    # fixed physical point (x, t) = (2, 1); residual halves when lam halves
    constants = NATURAL_UNITS
    energy = 0.5
    x_target, t_target = 2.0, 1.0
    residuals = []
    for n in (64, 128, 256):
        lam = x_target / n
        params = make_params(constants, lam=lam, energy=energy)
        wave = _right_wave(params)
        j_t = round(t_target / params.tau)
        residuals.append(continuity_residual(wave, LatticePoint(n, j_t)))
    assert residuals[0] / residuals[1] == pytest.approx(2.0, rel=0.15)
    assert residuals[1] / residuals[2] == pytest.approx(2.0, rel=0.15)


def test_continuity_residual_zero_wave_limit():
    # k and omega both effectively zero: the residual collapses with them
    params = make_params(NATURAL_UNITS, lam=1.0, energy=1e-300)
    wave = _right_wave(params)
    assert abs(continuity_residual(wave, LatticePoint(4, 4))) < 1e-100


def test_continuity_residual_log_matches_rectangular():
    rng = random.Random(37)
    for _ in range(50):
        params = params_from_products(rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0))
        wave = _right_wave(params, 1.5 - 0.5j)
        p = LatticePoint(rng.randint(-20, 20), rng.randint(-20, 20))
        assert continuity_residual_log(wave, p) == pytest.approx(
            math.log(continuity_residual(wave, p)), rel=1e-10
        )


def test_observable_sample_rejects_negative_density():
    with pytest.raises(ValidationError):
        ObservableSample(LatticePoint(0, 0), -1.0, None)
