"""Exception hierarchy shared by every tanglekit module."""


class TangleError(Exception):
    """Base class for all tanglekit errors."""


class ZeroStateError(TangleError, ValueError):
    """Amplitude vector has (numerically) zero norm."""


class BadLengthError(TangleError, ValueError):
    """Amplitude vector length is not 2**n."""


class DimensionError(TangleError, ValueError):
    """Qubit count or qubit index outside the supported range."""


class BadSubsetError(TangleError, ValueError):
    """Kept-qubit set is empty, complete, or out of range."""


class BadPermutationError(TangleError, ValueError):
    """Permutation is not a bijection on the qubit labels."""


class NotUnitaryError(TangleError, ValueError):
    """Matrix handed to LocalUnitary fails the unitarity check."""


class DegenerateCError(TangleError, ArithmeticError):
    """Quadratic root requested with a vanishing leading coefficient."""


class NegativeBoundError(TangleError, ArithmeticError):
    """Squared-tangle bound came out negative beyond round-off."""


class DegenerateDenominatorError(TangleError, ArithmeticError):
    """Zeroing unitary could not be built after the allowed retries."""


class BadRowError(TangleError, ValueError):
    """Unknown row (or missing slice index) for a four-qubit triple."""


class IdentityViolatedError(TangleError, AssertionError):
    """An exact algebraic identity failed; indicates an implementation bug."""


class RankTooLargeError(TangleError, ValueError):
    """Requested ensemble is shorter than the rank of the density matrix."""


class UnknownStateError(TangleError, KeyError):
    """Catalog lookup for a name that is not registered."""


class StateFileError(TangleError, ValueError):
    """Malformed state file; carries the offending line number."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
