"""Exception hierarchy shared by every cl2 module."""


class Cl2Error(Exception):
    """Base class for domain errors raised by cl2."""


class ZeroDivisorError(Cl2Error, ZeroDivisionError):
    """Raised when an element with H(a) = 0 is asked for a two-sided inverse."""


class IrrationalCoefficientError(Cl2Error, ValueError):
    """Raised when a rational-only operation receives a coefficient with a sqrt part."""


class RadicandMismatchError(Cl2Error, ValueError):
    """Raised when two scalars carry distinct irrational radicands."""


class NotSimilarError(Cl2Error):
    pass


class NotPseudosimilarError(Cl2Error):
    pass


class InternalConsistencyError(Cl2Error, AssertionError):
    """A constructed witness failed its own exact substitution check."""
