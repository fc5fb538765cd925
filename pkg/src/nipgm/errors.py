"""Exception hierarchy shared across the package."""


class GreyError(Exception):
    """Base class for every error raised by nipgm."""


class DomainError(GreyError, ValueError):
    """An input value lies outside its admissible domain."""


class InsufficientData(GreyError, ValueError):
    """Too few observations for the requested operation."""


class ShapeError(GreyError, ValueError):
    """Array lengths or dimensions do not agree."""


class FormatError(GreyError, ValueError):
    """A data file could not be parsed."""


class NotFound(GreyError, KeyError):
    """An unknown dataset, case or model name was requested."""


class NumericalError(GreyError, ArithmeticError):
    """Base class for failures of the numerical routines."""


class RankDeficient(NumericalError):
    """The least-squares design matrix is numerically rank deficient."""


class NearSingular(NumericalError):
    """A closed-form expression would divide by a (near) zero quantity."""


class FitFailed(NumericalError):
    """Estimation produced non-finite parameters or predictions."""


class Overflow(NumericalError, OverflowError):
    """An intermediate quantity exceeded the floating point range."""
