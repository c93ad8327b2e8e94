"""Exception hierarchy shared across the package."""


class VqintError(Exception):
    """Base class for all library-specific failures."""


class InvalidInputError(VqintError, ValueError):
    """Malformed arguments: dimension mismatches, non-finite angles, bad lengths."""


class InvalidConfigError(VqintError, ValueError):
    """A configuration value is out of its admissible range or missing."""


class StateModeError(VqintError):
    """Operation requires the other state representation (statevector vs density)."""


class ChannelDefinitionError(VqintError):
    """Kraus operators do not satisfy the completeness relation."""


class NumericalConsistencyError(VqintError):
    """A quantity that should be real/small came out larger than tolerance."""


class DomainError(VqintError, ValueError):
    """Evaluation point lies outside the admissible input domain."""


class ExtrapolationError(DomainError):
    """Integral endpoint lies outside the trained domain."""


class UnsupportedParameterError(VqintError):
    """Parameter-shift rule requested for a parameter it does not cover."""


class UndefinedMetricError(VqintError):
    """Metric is undefined for the given inputs (zero variance, zero mass)."""


class QuadratureError(VqintError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class TrainingDiverged(VqintError):
    """Loss exceeded the divergence threshold; carries the partial run record."""

    def __init__(self, message, run=None):
        super().__init__(message)
        self.run = run
