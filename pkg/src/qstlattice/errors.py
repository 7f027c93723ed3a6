"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input failed validation; the message names the offending field."""


class DomainError(ValueError):
    """A lattice index fell outside a window, or a window is too short for a stencil."""


class AmplitudeOverflowError(OverflowError):
    """A rectangular complex value exceeded double range; use the log-polar path."""


class UnsupportedWaveError(ValueError):
    """The operation is defined for right-moving waves only (b_amp must be zero)."""


class DegenerateFitError(ValueError):
    """The convergence fit received a zero error; drop exact points before fitting."""
