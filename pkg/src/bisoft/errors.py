"""Exception types shared across the package."""


class BisoftError(Exception):
    """Base class for all package errors."""


class ContextMismatchError(BisoftError):
    """Two values from different (universe, parameter set) contexts were mixed."""


class UnknownElementError(BisoftError, KeyError):
    """An element name is not part of the universe."""


class UnknownParameterError(BisoftError, KeyError):
    """A parameter name is not part of the parameter set."""


class InvalidTopologyError(BisoftError):
    """A soft set family violates the topology axioms.

    Carries the list of violations so callers can print witnesses.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"not a soft topology: {lines}")


class FixtureError(BisoftError):
    """A fixture document failed to parse or resolve."""


class UnknownClaimError(BisoftError, KeyError):
    """A claim identifier is not registered."""
