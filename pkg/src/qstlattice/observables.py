"""Probability density and probability current for continuum and lattice waves.

For the right mover the lattice observables factorize like the wave itself:

    P(j_x, j_t) = |A|^2 (1 + k^2 lam^2)^j_x (1 + omega^2 tau^2)^j_t
    J(j_x, j_t) = (hbar k / m) P(j_x, j_t)

both monotonically increasing in each index, unlike the constant continuum
values |A|^2 and (hbar k / m) |A|^2.  The flux is also evaluated straight
from its Hermitian difference-quotient definition as an independent route to
the closed form.  A discrete continuity residual is reported as a diagnostic
only: the lattice model genuinely violates continuity at finite lam, with

    residual = P * (omega^2 tau + hbar k^3 lam / m)

vanishing linearly as lam -> 0.

The time-factor normalization t0 multiplies into the effective right-mover
amplitude (A_eff = a_amp * t0), which keeps the closed forms consistent with
|psi|^2 for any t0.  Formulas here assume b_amp = 0 and reject anything else;
extending them would need interference terms outside this model's scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import AmplitudeOverflowError, ValidationError
from .params import LatticePoint, QstParams
from .waves import QstWave, qst_plane_wave, require_right_mover


def density_continuum(a_amp: complex) -> float:
    """|A|^2, independent of position and time."""
    return abs(complex(a_amp)) ** 2


def flux_continuum(params: QstParams, a_amp: complex) -> float:
    """(hbar k / m) |A|^2, also constant."""
    return (params.constants.hbar * params.k / params.constants.mass) * density_continuum(a_amp)


def _pow_real(base: float, n: int) -> float:
    try:
        value = base**n
    except OverflowError as exc:
        raise AmplitudeOverflowError(
            f"{base!r}**{n} exceeds the double range; use the log-domain variant"
        ) from exc
    return value


def _checked_finite(value: float) -> float:
    if math.isinf(value):
        raise AmplitudeOverflowError("rectangular value exceeds the double range; use the log-domain variant")
    return value


def density_qst(wave: QstWave, p: LatticePoint) -> float:
    """Closed-form lattice density of the right mover."""
    require_right_mover(wave.spec)
    pr = wave.params
    amp_sq = abs(wave.spec.a_amp * wave.spec.t0) ** 2
    growth_x = _pow_real(1.0 + pr.k_lam * pr.k_lam, p.j_x)
    growth_t = _pow_real(1.0 + pr.omega_tau * pr.omega_tau, p.j_t)
    return _checked_finite(amp_sq * growth_x * growth_t)


def _log_abs(z: complex) -> float:
    mag = abs(z)
    return math.log(mag) if mag > 0.0 else -math.inf


def density_qst_log(wave: QstWave, p: LatticePoint) -> float:
    """Natural log of the lattice density; representable for indices in the millions."""
    require_right_mover(wave.spec)
    pr = wave.params
    kl = pr.k_lam
    ot = pr.omega_tau
    # grouped per factor so the result is exactly twice the wave's log-magnitude
    time_term = 2.0 * _log_abs(wave.spec.t0) + p.j_t * math.log1p(ot * ot)
    space_term = 2.0 * _log_abs(wave.spec.a_amp) + p.j_x * math.log1p(kl * kl)
    return time_term + space_term


def flux_qst_closed(wave: QstWave, p: LatticePoint) -> float:
    """Closed-form lattice flux: (hbar k / m) times the density."""
    pr = wave.params
    return _checked_finite(
        (pr.constants.hbar * pr.k / pr.constants.mass) * density_qst(wave, p)
    )


def flux_qst_closed_log(wave: QstWave, p: LatticePoint) -> tuple[float, float]:
    """Log-domain flux as (log magnitude, sign); sign is 0.0 for an identically zero flux."""
    pr = wave.params
    log_density = density_qst_log(wave, p)
    if log_density == -math.inf:
        return (-math.inf, 0.0)
    return (math.log(pr.constants.hbar * pr.k / pr.constants.mass) + log_density, 1.0)


def flux_qst_from_definition(wave: QstWave, p: LatticePoint) -> float:
    """Flux from the Hermitian difference-quotient form.

    Evaluates (hbar / 2 i m) [psi* (Delta psi / lam) - (Delta psi* / lam) psi]
    with the forward difference in j_x; must reproduce flux_qst_closed.
    """
    require_right_mover(wave.spec)
    pr = wave.params
    psi = qst_plane_wave(wave, p)
    psi_next = qst_plane_wave(wave, LatticePoint(p.j_x + 1, p.j_t))
    dpsi = (psi_next - psi) / pr.lam
    bracket = psi.conjugate() * dpsi - dpsi.conjugate() * psi
    value = (pr.constants.hbar / (2.0 * pr.constants.mass)) * (bracket / 1j)
    return value.real


def continuity_residual(wave: QstWave, p: LatticePoint) -> float:
    """Forward-differenced continuity defect; a diagnostic, not a conservation law."""
    pr = wave.params
    p_now = density_qst(wave, p)
    p_next_t = density_qst(wave, LatticePoint(p.j_x, p.j_t + 1))
    j_now = flux_qst_closed(wave, p)
    j_next_x = flux_qst_closed(wave, LatticePoint(p.j_x + 1, p.j_t))
    return (p_next_t - p_now) / pr.tau + (j_next_x - j_now) / pr.lam


def predicted_continuity_residual(wave: QstWave, p: LatticePoint) -> float:
    """Closed-form value of the continuity residual: P * (omega^2 tau + hbar k^3 lam / m)."""
    pr = wave.params
    coefficient = pr.omega**2 * pr.tau + pr.constants.hbar * pr.k**3 * pr.lam / pr.constants.mass
    return density_qst(wave, p) * coefficient


def _log_add(a: float, b: float) -> float:
    if a == -math.inf:
        return b
    if b == -math.inf:
        return a
    if b > a:
        a, b = b, a
    return a + math.log1p(math.exp(b - a))


def continuity_residual_log(wave: QstWave, p: LatticePoint) -> float:
    """Log of the continuity residual; both differenced terms are positive for k, omega > 0."""
    pr = wave.params
    log_p = density_qst_log(wave, p)
    log_j = flux_qst_closed_log(wave, p)[0]
    # log(P(j+1) - P(j)) = log P(j) + log(expm1(per-step log growth))
    step_t = math.log1p(pr.omega_tau * pr.omega_tau)
    step_x = math.log1p(pr.k_lam * pr.k_lam)
    time_term = log_p + math.log(math.expm1(step_t)) - math.log(pr.tau)
    space_term = log_j + math.log(math.expm1(step_x)) - math.log(pr.lam)
    return _log_add(time_term, space_term)


@dataclass(frozen=True)
class ObservableSample:
    """Density and flux at one lattice point, rectangular and/or log-domain."""

    point: LatticePoint
    density: float | None
    flux: float | None
    log_density: float | None = None
    log_flux: float | None = None
    flux_sign: float | None = None

    def __post_init__(self) -> None:
        if self.density is not None and self.density < 0.0:
            raise ValidationError(f"density must be nonnegative, got {self.density!r}")
