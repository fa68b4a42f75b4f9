"""
Error hierarchy for UPB Lab.

Every domain error carries a numeric ``code`` which the sweep runner writes
into the ``error_code`` column of a result table when a grid point fails.
"""


class UPBError(Exception):
    """Base class of all errors raised by the simulation library."""

    code = 1


class SingularMatrix(UPBError):
    code = 10


class NotHermitian(UPBError):
    code = 11


class DimensionMismatch(UPBError):
    code = 12


class NonFiniteResult(UPBError):
    code = 13


class DegenerateKernel(UPBError):
    code = 20


class StepSizeUnderflow(UPBError):
    code = 21


class TraceDrift(UPBError):
    code = 22


class InvalidState(UPBError):
    code = 23


class ZeroPopulation(UPBError):
    """Photon population too small to normalise a correlation function."""

    code = 30


class ImaginaryResidue(UPBError):
    code = 31


class DegenerateDenominator(UPBError):
    code = 40


class InvalidParams(UPBError):
    code = 50


class InvalidConfig(UPBError):
    code = 51


class UnknownPreset(UPBError):
    code = 52


class ShapeMismatch(UPBError):
    code = 60


class OutputError(UPBError):
    """Raised when a result file cannot be written."""

    code = 61
