"""Physical parameters and lattice indexing for the quantized space-time model.

The model replaces continuous position and time by the integer lattices
x = j_x * lam and t = j_t * tau, where lam is a fundamental length and
tau = lam / c the matching time step.  A free particle of energy E carries
wavenumber k = sqrt(2 m E) / hbar and angular frequency omega = E / hbar, so
the dispersion relation hbar * omega = (hbar * k)^2 / (2 m) holds by
construction rather than by user discipline.

Defaults are natural units (hbar = m = c = 1); pass explicit constants for
unit-carrying runs.  The Planck length is the physical motivation for a
fundamental lam and is exposed below for documentation only; nothing in the
package computes with it.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

from .errors import ValidationError

# sqrt(G * hbar / c^3); motivation for a fundamental length, unused by computation.
PLANCK_LENGTH_M = 1.6e-35
GRAVITATIONAL_CONSTANT_SI = 6.67430e-11  # m^3 kg^-1 s^-2

# Worst observed rounding gap between hbar*omega and (hbar*k)^2/(2m) when both
# are derived from the same energy is 6 ulp (sqrt/square round trip).
_DISPERSION_ULPS = 8.0


def _positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValidationError(f"{name} must be a positive finite number, got {value!r}")
    return value


def _close_enough(got: float, want: float) -> bool:
    return abs(got - want) <= 4.0 * math.ulp(max(abs(got), abs(want)))


@dataclass(frozen=True)
class PhysicalConstants:
    """Reduced Planck constant, particle mass, and light speed; all positive."""

    hbar: float = 1.0
    mass: float = 1.0
    light_speed: float = 1.0

    def __post_init__(self) -> None:
        for name in ("hbar", "mass", "light_speed"):
            object.__setattr__(self, name, _positive(name, getattr(self, name)))


NATURAL_UNITS = PhysicalConstants()


@dataclass(frozen=True)
class QstParams:
    """Lattice scales and dispersion quantities for one free-particle setup.

    tau is slaved to lam through tau = lam / light_speed, and k and omega are
    derived from the energy.  Construct instances with make_params (physical
    inputs) or params_from_products (dimensionless inputs); the constructor
    verifies the defining relations and the dispersion identity.
    """

    constants: PhysicalConstants
    lam: float
    tau: float
    energy: float
    k: float
    omega: float

    def __post_init__(self) -> None:
        for name in ("lam", "tau", "energy", "k", "omega"):
            _positive(name, getattr(self, name))
        c = self.constants
        if not _close_enough(self.tau, self.lam / c.light_speed):
            raise ValidationError(f"tau={self.tau!r} is not lam/light_speed={self.lam / c.light_speed!r}")
        if not _close_enough(self.k, math.sqrt(2.0 * c.mass * self.energy) / c.hbar):
            raise ValidationError(f"k={self.k!r} is not sqrt(2*mass*energy)/hbar")
        if not _close_enough(self.omega, self.energy / c.hbar):
            raise ValidationError(f"omega={self.omega!r} is not energy/hbar")
        lhs = c.hbar * self.omega
        rhs = (c.hbar * self.k) ** 2 / (2.0 * c.mass)
        if abs(lhs - rhs) > _DISPERSION_ULPS * math.ulp(max(abs(lhs), abs(rhs))):
            raise ValidationError(f"dispersion identity violated: hbar*omega={lhs!r}, (hbar*k)^2/(2m)={rhs!r}")

    @property
    def k_lam(self) -> float:
        """Dimensionless spatial growth parameter k * lam."""
        return self.k * self.lam

    @property
    def omega_tau(self) -> float:
        """Dimensionless temporal growth parameter omega * tau."""
        return self.omega * self.tau


def make_params(constants: PhysicalConstants, lam: float, energy: float) -> QstParams:
    """Derive lattice scales and dispersion quantities from (lam, energy)."""
    lam = _positive("lam", lam)
    energy = _positive("energy", energy)
    tau = lam / constants.light_speed
    k = math.sqrt(2.0 * constants.mass * energy) / constants.hbar
    omega = energy / constants.hbar
    return QstParams(constants=constants, lam=lam, tau=tau, energy=energy, k=k, omega=omega)


def params_from_products(k_lam: float, omega_tau: float) -> QstParams:
    """Build params realizing the dimensionless products k*lam and omega*tau.

    Every closed form depends on the lattice only through these two products
    plus hbar*k/mass, so dimensionless runs fix hbar = mass = k = 1 (hence
    energy = 1/2 and hbar*k/mass = 1) and choose lam, tau, light_speed to
    match the requested products exactly.
    """
    k_lam = _positive("k_lam", k_lam)
    omega_tau = _positive("omega_tau", omega_tau)
    tau = 2.0 * omega_tau  # omega = 1/2, so omega*tau reproduces the input bit for bit
    constants = PhysicalConstants(hbar=1.0, mass=1.0, light_speed=k_lam / tau)
    return QstParams(constants=constants, lam=k_lam, tau=tau, energy=0.5, k=1.0, omega=0.5)


def energy_for_wavenumber(constants: PhysicalConstants, k: float) -> float:
    """Energy whose derived wavenumber equals k: E = (hbar*k)^2 / (2*mass)."""
    k = _positive("k", k)
    return (constants.hbar * k) ** 2 / (2.0 * constants.mass)


def _index(name: str, value) -> int:
    try:
        return operator.index(value)
    except TypeError as exc:
        raise ValidationError(f"{name} must be an exact integer, got {value!r}") from exc


@dataclass(frozen=True)
class LatticePoint:
    """Integer lattice address (j_x, j_t); either sign is allowed."""

    j_x: int
    j_t: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "j_x", _index("j_x", self.j_x))
        object.__setattr__(self, "j_t", _index("j_t", self.j_t))


def _finite_complex(name: str, value) -> complex:
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class WaveSpec:
    """Superposition amplitudes: a_amp (right mover), b_amp (left mover), t0 (time normalization)."""

    a_amp: complex = 1.0 + 0.0j
    b_amp: complex = 0.0j
    t0: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        for name in ("a_amp", "b_amp", "t0"):
            object.__setattr__(self, name, _finite_complex(name, getattr(self, name)))
        if self.a_amp == 0 and self.b_amp == 0:
            raise ValidationError("a_amp and b_amp are both zero; the wave would be trivial")

    @classmethod
    def right_mover(cls, a_amp: complex = 1.0, t0: complex = 1.0) -> "WaveSpec":
        return cls(a_amp=complex(a_amp), b_amp=0.0j, t0=complex(t0))

    @property
    def is_right_mover(self) -> bool:
        return self.b_amp == 0
