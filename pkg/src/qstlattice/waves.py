"""Closed-form and recursion-based eigenfunctions of the lattice free particle.

Separating psi = T * U turns the free-particle equation on the lattice into
two one-step recursions,

    T((j+1) tau) = (1 - i omega tau) T(j tau)
    U((j+2) lam) = 2 U((j+1) lam) - (1 + k^2 lam^2) U(j lam)

with closed forms

    T(j_t) = T(0) (1 - i omega tau)^j_t
    U(j_x) = A (1 + i k lam)^j_x + B (1 - i k lam)^j_x

since 1 +/- i k lam are exactly the roots of r^2 - 2r + (1 + k^2 lam^2) = 0.
The recursion steppers are deliberately window-free one-step maps so they can
serve as independent oracles for the closed forms.  Negative indices are
integer powers of the reciprocal; both factor moduli exceed zero, so every
integer index is reachable.

The one-step kernels (advance_time, advance_space) take the dimensionless
products directly; degenerate products (zero) are meaningful there even
though QstParams requires positive energy.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import UnsupportedWaveError
from .lattice import LatticeFunction
from .logpolar import (
    LogPolarAmplitude,
    complex_ipow,
    log_polar_add,
    log_polar_ipow,
    log_polar_mul,
    to_log_polar,
)
from .params import LatticePoint, QstParams, WaveSpec


def time_ratio(omega_tau: float) -> complex:
    """One-step multiplier of the time recursion: 1 - i omega tau."""
    return complex(1.0, -omega_tau)


def space_roots(k_lam: float) -> tuple[complex, complex]:
    """Characteristic roots (right mover, left mover): 1 +/- i k lam."""
    return complex(1.0, k_lam), complex(1.0, -k_lam)


def advance_time(omega_tau: float, t_current: complex) -> complex:
    """One step of the time recursion at a given dimensionless product."""
    return time_ratio(omega_tau) * complex(t_current)


def advance_space(k_lam: float, u_prev: complex, u_curr: complex) -> complex:
    """One step of the space recursion: U(j+2) = 2 U(j+1) - (1 + k^2 lam^2) U(j)."""
    return 2.0 * complex(u_curr) - (1.0 + k_lam * k_lam) * complex(u_prev)


def step_time_recursion(params: QstParams, t_current: complex) -> complex:
    """Advance the time factor by one lattice step."""
    return advance_time(params.omega_tau, t_current)


def step_space_recursion(params: QstParams, u_prev: complex, u_curr: complex) -> complex:
    """Advance the space factor by one lattice step from two seed values."""
    return advance_space(params.k_lam, u_prev, u_curr)


def _base_log_polar(t: float) -> LogPolarAmplitude:
    # log|1 + i t| as 0.5*log1p(t*t): log(hypot(...)) would lose the relative
    # accuracy that million-index powers need.
    return LogPolarAmplitude(0.5 * math.log1p(t * t), math.atan2(t, 1.0))


def time_factor(params: QstParams, t0: complex, j_t: int) -> complex:
    """T(j_t) = t0 * (1 - i omega tau)^j_t."""
    return complex(t0) * complex_ipow(time_ratio(params.omega_tau), j_t)


def time_factor_log(params: QstParams, t0: complex, j_t: int) -> LogPolarAmplitude:
    """Log-polar variant of time_factor; exact for indices far beyond double range."""
    power = log_polar_ipow(_base_log_polar(-params.omega_tau), j_t)
    return log_polar_mul(to_log_polar(complex(t0)), power)


def space_factor(params: QstParams, spec: WaveSpec, j_x: int) -> complex:
    """U(j_x) = A (1 + i k lam)^j_x + B (1 - i k lam)^j_x."""
    right, left = space_roots(params.k_lam)
    total = 0j
    if spec.a_amp != 0:
        total += spec.a_amp * complex_ipow(right, j_x)
    if spec.b_amp != 0:
        total += spec.b_amp * complex_ipow(left, j_x)
    return total


def space_factor_log(params: QstParams, spec: WaveSpec, j_x: int) -> LogPolarAmplitude:
    """Log-polar variant of space_factor."""
    t = params.k_lam
    terms = []
    if spec.a_amp != 0:
        terms.append(log_polar_mul(to_log_polar(spec.a_amp), log_polar_ipow(_base_log_polar(t), j_x)))
    if spec.b_amp != 0:
        terms.append(log_polar_mul(to_log_polar(spec.b_amp), log_polar_ipow(_base_log_polar(-t), j_x)))
    if len(terms) == 1:
        return terms[0]
    return log_polar_add(terms[0], terms[1])


@dataclass(frozen=True)
class QstWave:
    """A lattice plane wave: parameters plus superposition amplitudes."""

    params: QstParams
    spec: WaveSpec


def require_right_mover(spec: WaveSpec) -> None:
    """Reject superpositions where a right-mover-only formula would be wrong."""
    if not spec.is_right_mover:
        raise UnsupportedWaveError(
            f"operation is defined for right-moving waves only; got b_amp={spec.b_amp!r}"
        )


def qst_plane_wave(wave: QstWave, p: LatticePoint) -> complex:
    """psi(j_x, j_t) = T(j_t) * U(j_x)."""
    return time_factor(wave.params, wave.spec.t0, p.j_t) * space_factor(wave.params, wave.spec, p.j_x)


def qst_plane_wave_log(wave: QstWave, p: LatticePoint) -> LogPolarAmplitude:
    """Log-polar variant of qst_plane_wave."""
    return log_polar_mul(
        time_factor_log(wave.params, wave.spec.t0, p.j_t),
        space_factor_log(wave.params, wave.spec, p.j_x),
    )


def continuum_plane_wave(params: QstParams, a_amp: complex, x: float, t: float) -> complex:
    """A exp(i (k x - omega t)); modulus |A| everywhere."""
    return complex(a_amp) * cmath.exp(1j * (params.k * x - params.omega * t))


def continuum_superposition(params: QstParams, spec: WaveSpec, x: float, t: float) -> complex:
    """t0 * (A e^{i(kx - wt)} + B e^{-i(kx + wt)}), the continuum counterpart of the lattice superposition."""
    right = continuum_plane_wave(params, spec.a_amp, x, t)
    left = spec.b_amp * cmath.exp(-1j * (params.k * x + params.omega * t))
    return spec.t0 * (right + left)


def wave_window(wave: QstWave, j_lo: int, j_hi: int, j_t: int = 0) -> LatticeFunction:
    """Sample psi at fixed j_t over the inclusive spatial window [j_lo, j_hi]."""
    tf = time_factor(wave.params, wave.spec.t0, j_t)
    return LatticeFunction.tabulate(lambda j: tf * space_factor(wave.params, wave.spec, j), j_lo, j_hi)
