"""Position-momentum commutators for continuum and lattice waves.

On the lattice, p = (-i hbar / lam) * forward difference and x = multiply by
j * lam, so applying (px - xp) to any window telescopes,

    (j+1) f(j+1) - j f(j) - j f(j+1) + j f(j) = f(j+1),

leaving -i hbar times the right shift: [p, x] = -i hbar sigma as an operator
identity, for arbitrary lattice functions.  On a right-moving eigenfunction
the shift multiplies by (1 + i k lam), which gives the momentum form
-i hbar (1 + i p lam / hbar) with the eigenvalue p = hbar k substituted; as
k lam -> 0 this recovers the continuum constant -i hbar to first order.

The commutator is evaluated by literal stencil application (momentum and
position operators composed both ways), never by symbolic simplification, so
the checks genuinely exercise the cancellation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import LatticeFunction, subtract
from .operators import momentum_apply, position_apply, shift
from .params import QstParams
from .waves import QstWave, continuum_plane_wave, require_right_mover, wave_window

# Identical stencils on both sides leave only association-order rounding.
SHIFT_IDENTITY_RTOL = 1e-13
MOMENTUM_FORM_RTOL = 1e-12


def commutator_continuum_on_plane_wave(params: QstParams, a_amp: complex, x: float, t: float) -> complex:
    """(px - xp) psi for the continuum plane wave, derivatives in closed form.

    The product rule gives -i hbar psi exactly; both operator orders are
    evaluated so the cancellation actually happens.
    """
    psi = continuum_plane_wave(params, a_amp, x, t)
    dpsi = 1j * params.k * psi  # d/dx of the plane wave
    hbar = params.constants.hbar
    p_of_xpsi = -1j * hbar * (psi + x * dpsi)
    x_of_ppsi = x * (-1j * hbar * dpsi)
    return p_of_xpsi - x_of_ppsi


def commutator_qst_apply(params: QstParams, f: LatticeFunction) -> LatticeFunction:
    """(px - xp) f by composing the lattice momentum and position operators.

    The output lives on f's window shortened by one on the right and equals
    -i hbar * shift(f) up to rounding.
    """
    p_of_xf = momentum_apply(params, position_apply(params, f))
    x_of_pf = position_apply(params, momentum_apply(params, f))
    return subtract(p_of_xf, x_of_pf)


@dataclass(frozen=True)
class DeviationReport:
    """Outcome of comparing the commutator against -i hbar sigma on one window."""

    max_deviation: float
    scale: float
    tolerance: float
    passed: bool


def shift_identity_check(params: QstParams, f: LatticeFunction) -> DeviationReport:
    """Compare (px - xp) f with -i hbar shift(f) componentwise."""
    hbar = params.constants.hbar
    lhs = commutator_qst_apply(params, f)
    rhs = shift(f).scaled(-1j * hbar)
    deviation = max(abs(a - b) for a, b in zip(lhs.values, rhs.values))
    scale = f.max_abs()
    tolerance = SHIFT_IDENTITY_RTOL * hbar * scale
    return DeviationReport(deviation, scale, tolerance, deviation <= tolerance)


@dataclass(frozen=True)
class MomentumFormReport:
    """Outcome of checking [p, x] psi = -i hbar (1 + i k lam) psi on a right mover."""

    constant: complex
    max_rel_error: float
    tolerance: float
    passed: bool


def momentum_form_identity_check(wave: QstWave, j_lo: int, j_hi: int, j_t: int = 0) -> MomentumFormReport:
    """Verify the momentum form of the commutator on the window [j_lo, j_hi].

    Valid on momentum eigenfunctions only, where the shift acts as
    multiplication by (1 + i k lam); general functions obey the shift
    identity instead.
    """
    require_right_mover(wave.spec)
    params = wave.params
    hbar = params.constants.hbar
    expected = -1j * hbar * complex(1.0, params.k_lam)
    f = wave_window(wave, j_lo, j_hi, j_t=j_t)
    comm = commutator_qst_apply(params, f)
    max_rel = 0.0
    for j, value in comm.items():
        target = expected * f.value_at(j)
        denom = abs(target)
        residual = abs(value - target)
        if denom == 0.0:
            if residual != 0.0:
                max_rel = float("inf")
            continue
        max_rel = max(max_rel, residual / denom)
    return MomentumFormReport(expected, max_rel, MOMENTUM_FORM_RTOL, max_rel <= MOMENTUM_FORM_RTOL)
