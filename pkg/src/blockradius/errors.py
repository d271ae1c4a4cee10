"""Exception hierarchy shared by every module of the package."""


class BlockRadiusError(Exception):
    """Base class for all errors raised by :mod:`blockradius`."""


class MatrixFormatError(BlockRadiusError, ValueError):
    """Raised when an operand is not a finite square complex matrix."""


class DimMismatch(BlockRadiusError, ValueError):
    """Raised when operands that must share a dimension do not."""


class NotHermitian(BlockRadiusError, ValueError):
    """Raised when a Hermitian operand is required but not supplied."""


class NotPSD(BlockRadiusError, ValueError):
    """Raised when a positive semidefinite operand is required but not supplied."""


class AlphaOutOfRange(BlockRadiusError, ValueError):
    """Raised when an interpolation parameter falls outside ``[0, 1]``."""


class UnknownCheck(BlockRadiusError, KeyError):
    """Raised when a verification check name is not registered."""

    def __str__(self):
        return Exception.__str__(self)


class NumericalFailure(BlockRadiusError, ArithmeticError):
    """Base class for failures of an iterative numerical method."""


class NoConvergence(NumericalFailure):
    """Raised when an iteration exhausts its budget without converging."""


class ToleranceUnreachable(NumericalFailure):
    """Raised when a requested accuracy is below what the method can certify."""
