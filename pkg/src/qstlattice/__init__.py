"""Free-particle quantum mechanics on a quantized space-time lattice.

Positions and times take only integer multiples of a fundamental length lam
and the slaved time step tau = lam / c.  The package provides the discrete
plane-wave eigenfunctions and their recursion-based oracles, probability
density and flux observables, the lattice position-momentum commutator and
its operator identities, and a continuum-limit engine that measures how fast
everything converges back to the usual plane wave as lam -> 0.
"""

from .commutators import (
    DeviationReport,
    MomentumFormReport,
    commutator_continuum_on_plane_wave,
    commutator_qst_apply,
    momentum_form_identity_check,
    shift_identity_check,
)
from .errors import (
    AmplitudeOverflowError,
    DegenerateFitError,
    DomainError,
    UnsupportedWaveError,
    ValidationError,
)
from .lattice import LatticeFunction, subtract
from .limits import (
    DEFAULT_STEPS,
    LimitSample,
    LimitSchedule,
    ObservableLimitReport,
    WaveFamily,
    convergence_order,
    error_pairs,
    limit_error,
    monotone_from,
    observable_limit_check,
)
from .logpolar import (
    BINARY_POW_LIMIT,
    LogPolarAmplitude,
    ZERO_AMPLITUDE,
    complex_ipow,
    from_log_polar,
    log_polar_add,
    log_polar_ipow,
    log_polar_mul,
    to_log_polar,
    wrap_phase,
)
from .observables import (
    ObservableSample,
    continuity_residual,
    continuity_residual_log,
    density_continuum,
    density_qst,
    density_qst_log,
    flux_continuum,
    flux_qst_closed,
    flux_qst_closed_log,
    flux_qst_from_definition,
    predicted_continuity_residual,
)
from .operators import (
    LatticeOperator,
    compose,
    diff_op,
    forward_difference,
    momentum_apply,
    momentum_op,
    position_apply,
    position_op,
    second_diff_op,
    second_difference,
    shift,
    shift_op,
)
from .params import (
    GRAVITATIONAL_CONSTANT_SI,
    NATURAL_UNITS,
    PLANCK_LENGTH_M,
    LatticePoint,
    PhysicalConstants,
    QstParams,
    WaveSpec,
    energy_for_wavenumber,
    make_params,
    params_from_products,
)
from .waves import (
    QstWave,
    advance_space,
    advance_time,
    continuum_plane_wave,
    continuum_superposition,
    qst_plane_wave,
    qst_plane_wave_log,
    require_right_mover,
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

__version__ = "0.1.0"
