"""Continuum-limit schedules and convergence-order measurement.

The limit sends lam -> 0 while pinning j_x * lam to a target x.  Choosing
lam_n = x / n makes j_x = n with zero index-rounding error; tau is slaved to
lam through c and cannot also divide t exactly, so j_t rounds t / tau_n to
the nearest integer and the residual |j_t tau_n - t| is reported next to the
error.  Orders come from a log-log least-squares fit of error against 1/n
over the whole schedule, which is less noise-sensitive than adjacent-pair
ratios.  No extrapolation acceleration: the point is to measure the limit,
not to speed it up.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateFitError, ValidationError
from .observables import density_continuum, density_qst, flux_continuum, flux_qst_closed
from .params import LatticePoint, PhysicalConstants, WaveSpec, energy_for_wavenumber, make_params
from .waves import QstWave, continuum_plane_wave, qst_plane_wave

DEFAULT_STEPS = (10, 20, 40, 80, 160)


@dataclass(frozen=True)
class WaveFamily:
    """One physical setup swept over lattice spacings; only lam varies."""

    constants: PhysicalConstants
    energy: float
    a_amp: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        if not (math.isfinite(self.energy) and self.energy > 0.0):
            raise ValidationError(f"energy must be a positive finite number, got {self.energy!r}")
        object.__setattr__(self, "a_amp", complex(self.a_amp))
        if self.a_amp == 0:
            raise ValidationError("a_amp must be nonzero")

    @classmethod
    def from_wavenumber(cls, constants: PhysicalConstants, k: float, a_amp: complex = 1.0) -> "WaveFamily":
        return cls(constants, energy_for_wavenumber(constants, k), complex(a_amp))

    def wave_at(self, lam: float) -> QstWave:
        return QstWave(make_params(self.constants, lam, self.energy), WaveSpec.right_mover(self.a_amp))


@dataclass(frozen=True)
class LimitSchedule:
    """Targets (x, t) and the refinement steps n; lam_n = x / n, j_x = n."""

    x_target: float
    t_target: float
    steps: tuple[int, ...] = DEFAULT_STEPS

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x_target) and self.x_target > 0.0):
            raise ValidationError(f"x_target must be a positive finite number, got {self.x_target!r}")
        if not (math.isfinite(self.t_target) and self.t_target >= 0.0):
            raise ValidationError(f"t_target must be a nonnegative finite number, got {self.t_target!r}")
        steps = []
        for n in self.steps:
            try:
                n = operator.index(n)
            except TypeError as exc:
                raise ValidationError(f"steps must be integers, got {n!r}") from exc
            if n < 1:
                raise ValidationError(f"steps must be >= 1, got {n}")
            steps.append(n)
        if not steps:
            raise ValidationError("steps must be nonempty")
        object.__setattr__(self, "steps", tuple(sorted(set(steps))))


@dataclass(frozen=True)
class LimitSample:
    """One schedule point: refinement n, spacing, time index, rounding residual, error."""

    n: int
    lam: float
    j_t: int
    time_residual: float
    error: float


def _schedule_points(family: WaveFamily, schedule: LimitSchedule):
    for n in schedule.steps:
        lam = schedule.x_target / n
        wave = family.wave_at(lam)
        tau = wave.params.tau
        j_t = round(schedule.t_target / tau)
        residual = abs(j_t * tau - schedule.t_target)
        yield n, lam, wave, j_t, residual


def limit_error(family: WaveFamily, schedule: LimitSchedule) -> tuple[LimitSample, ...]:
    """|psi_lattice - psi_continuum| at the pinned target for each n, ordered by n."""
    samples = []
    for n, lam, wave, j_t, residual in _schedule_points(family, schedule):
        # k and omega depend on the energy only, so the reference is the same for every n
        reference = continuum_plane_wave(wave.params, family.a_amp, schedule.x_target, schedule.t_target)
        value = qst_plane_wave(wave, LatticePoint(n, j_t))
        samples.append(LimitSample(n, lam, j_t, residual, abs(value - reference)))
    return tuple(samples)


def error_pairs(samples) -> list[tuple[int, float]]:
    """Strip samples down to (n, error) pairs for the order fit."""
    return [(s.n, s.error) for s in samples]


def monotone_from(samples) -> int:
    """Smallest n from which the errors decrease strictly to the end of the schedule."""
    errors = [s.error for s in samples]
    start = len(errors) - 1
    while start > 0 and errors[start - 1] > errors[start]:
        start -= 1
    return samples[start].n


def convergence_order(errors) -> float:
    """Least-squares slope of log(error) against log(1/n)."""
    pairs = list(errors)
    if len(pairs) < 3:
        raise ValidationError(f"need at least 3 points to fit an order, got {len(pairs)}")
    for n, err in pairs:
        if err <= 0.0:
            raise DegenerateFitError(f"error at n={n} is {err!r}; drop exact points before fitting")
    xs = np.log([1.0 / n for n, _ in pairs])
    ys = np.log([err for _, err in pairs])
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


@dataclass(frozen=True)
class ObservableLimitReport:
    """Density and flux convergence along one schedule."""

    density_samples: tuple[LimitSample, ...]
    flux_samples: tuple[LimitSample, ...]
    density_order: float
    flux_order: float
    density_target: float
    flux_target: float

    @property
    def final_density_error(self) -> float:
        return self.density_samples[-1].error

    @property
    def final_flux_error(self) -> float:
        return self.flux_samples[-1].error


def observable_limit_check(family: WaveFamily, schedule: LimitSchedule) -> ObservableLimitReport:
    """Check that the lattice density and flux converge to their continuum constants."""
    density_target = density_continuum(family.a_amp)
    density_samples = []
    flux_samples = []
    flux_target = None
    for n, lam, wave, j_t, residual in _schedule_points(family, schedule):
        if flux_target is None:
            flux_target = flux_continuum(wave.params, family.a_amp)
        point = LatticePoint(n, j_t)
        density_samples.append(
            LimitSample(n, lam, j_t, residual, abs(density_qst(wave, point) - density_target))
        )
        flux_samples.append(
            LimitSample(n, lam, j_t, residual, abs(flux_qst_closed(wave, point) - flux_target))
        )
    return ObservableLimitReport(
        density_samples=tuple(density_samples),
        flux_samples=tuple(flux_samples),
        density_order=convergence_order(error_pairs(density_samples)),
        flux_order=convergence_order(error_pairs(flux_samples)),
        density_target=density_target,
        flux_target=flux_target,
    )
