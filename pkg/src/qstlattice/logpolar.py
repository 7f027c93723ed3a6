"""Overflow-safe complex arithmetic in (log-magnitude, phase) form.

The lattice eigenfunctions grow like (1 + k^2 lam^2)^(j/2) per index, which
leaves the rectangular double range around j*log|base| ~ 709.  Storing the
natural log of the magnitude keeps indices in the millions representable;
integer powers become a scalar multiply of the log and a phase wrap instead
of repeated complex multiplications, which also preserves phase accuracy.

Phases are reported in (-pi, pi].  Zero is the canonical pair
(log_mag=-inf, phase=0).  Converting back to rectangular raises
AmplitudeOverflowError instead of producing infinities.
"""

from __future__ import annotations

import cmath
import math
import operator
from dataclasses import dataclass

from .errors import AmplitudeOverflowError

_LN2 = math.log(2.0)

# Rectangular powering stays accurate and cheap up to this exponent; beyond it
# the log-polar route avoids both overflow and accumulated phase error.
BINARY_POW_LIMIT = 64


@dataclass(frozen=True)
class LogPolarAmplitude:
    """A complex value stored as (natural log of magnitude, phase in radians)."""

    log_mag: float
    phase: float

    @property
    def is_zero(self) -> bool:
        return self.log_mag == -math.inf


ZERO_AMPLITUDE = LogPolarAmplitude(-math.inf, 0.0)


def wrap_phase(phi: float) -> float:
    """Reduce a phase to (-pi, pi]."""
    w = math.remainder(phi, math.tau)
    return math.pi if w == -math.pi else w


def to_log_polar(z: complex) -> LogPolarAmplitude:
    """Convert a rectangular complex value; 0 maps to (-inf, 0)."""
    z = complex(z)
    try:
        mag = abs(z)
    except OverflowError:
        # both components near the double limit; rescale before the log
        mag_log = math.log(math.hypot(z.real * 0.25, z.imag * 0.25)) + 2.0 * _LN2
        return LogPolarAmplitude(mag_log, wrap_phase(cmath.phase(z)))
    if mag == 0.0:
        return ZERO_AMPLITUDE
    return LogPolarAmplitude(math.log(mag), wrap_phase(cmath.phase(z)))


def from_log_polar(a: LogPolarAmplitude) -> complex:
    """Convert back to rectangular form, refusing to overflow."""
    if a.is_zero:
        return 0j
    try:
        mag = math.exp(a.log_mag)
    except OverflowError as exc:
        raise AmplitudeOverflowError(
            f"log-magnitude {a.log_mag:.6g} exceeds the rectangular double range; "
            "keep the value in log-polar form"
        ) from exc
    return cmath.rect(mag, a.phase)


def log_polar_mul(a: LogPolarAmplitude, b: LogPolarAmplitude) -> LogPolarAmplitude:
    if a.is_zero or b.is_zero:
        return ZERO_AMPLITUDE
    return LogPolarAmplitude(a.log_mag + b.log_mag, wrap_phase(a.phase + b.phase))


def log_polar_ipow(a: LogPolarAmplitude, n: int) -> LogPolarAmplitude:
    """Integer power: scale the log-magnitude, wrap the phase."""
    n = operator.index(n)
    if n == 0:
        return LogPolarAmplitude(0.0, 0.0)
    if a.is_zero:
        if n < 0:
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        return ZERO_AMPLITUDE
    return LogPolarAmplitude(n * a.log_mag, wrap_phase(n * a.phase))


def log_polar_add(a: LogPolarAmplitude, b: LogPolarAmplitude) -> LogPolarAmplitude:
    """Sum two log-polar values by factoring out the larger magnitude."""
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if b.log_mag > a.log_mag:
        a, b = b, a
    ratio = cmath.rect(math.exp(b.log_mag - a.log_mag), b.phase - a.phase)  # |ratio| <= 1
    rest = 1.0 + ratio
    if rest == 0:
        return ZERO_AMPLITUDE
    return log_polar_mul(a, to_log_polar(rest))


def complex_ipow(z: complex, n: int) -> complex:
    """z**n for an exact integer n.

    Negative powers go through the reciprocal.  Exponents up to
    BINARY_POW_LIMIT use exponentiation by squaring in rectangular form;
    larger ones take the log-polar route and raise AmplitudeOverflowError if
    the result leaves the double range.
    """
    n = operator.index(n)
    if n == 0:
        return 1.0 + 0j
    z = complex(z)
    if z == 0:
        if n < 0:
            raise ZeroDivisionError("0 cannot be raised to a negative power")
        return 0j
    if abs(n) <= BINARY_POW_LIMIT:
        base = z if n > 0 else 1.0 / z
        exponent = abs(n)
        result = 1.0 + 0j
        while exponent:
            if exponent & 1:
                result *= base
            exponent >>= 1
            if exponent:
                base *= base
        if not (math.isfinite(result.real) and math.isfinite(result.imag)):
            raise AmplitudeOverflowError(f"{z!r}**{n} exceeds the rectangular double range")
        return result
    return from_log_polar(log_polar_ipow(to_log_polar(z), n))
