"""Exception types shared across the solver."""


class HelfrichError(Exception):
    """Base class for solver errors."""


class DomainError(HelfrichError):
    """An operation was evaluated outside its mathematical domain."""


class BlowUpError(HelfrichError):
    """The integration diverged before any requested stop event.

    Carries the partial trajectory in ``trajectory`` when available.
    """

    def __init__(self, message, trajectory=None):
        super().__init__(message)
        self.trajectory = trajectory


class NoEventError(HelfrichError):
    """Integration reached max sigma without triggering a requested event."""

    def __init__(self, message, trajectory=None):
        super().__init__(message)
        self.trajectory = trajectory


class WrongCaseError(HelfrichError):
    """A boundary-case residual was evaluated for incompatible parameters."""


class NoZeroCrossingError(HelfrichError):
    """A trajectory never reached the z = 0 plane."""


class InadmissibleError(HelfrichError):
    """The energy parameters violate an existence restriction for the case."""


class NoRootError(HelfrichError):
    """Bracket analysis found no candidate boundary-value solution."""


class DivergedError(HelfrichError):
    """Root polishing exceeded its iteration budget."""


class QuadratureError(HelfrichError):
    """Quadrature error estimate exceeded the requested threshold."""


class NotApplicableError(HelfrichError):
    """A diagnostic was requested for a solution it does not apply to."""


class ConfigError(HelfrichError):
    """A run-configuration file could not be parsed.

    ``line`` and ``column`` are 1-based positions of the offending token.
    """

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"line {line}, column {column or 1}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column
