"""Exception types shared across the package.

Every domain error derives from GpnfError so callers (and the CLI) can
distinguish domain failures (exit code 1) from usage bugs.
"""


class GpnfError(Exception):
    """Base class for all domain errors raised by this package."""


# -- number fields ----------------------------------------------------------

class NotSquarefree(GpnfError):
    """The defining polynomial has a repeated root."""


class NoRealRoot(GpnfError):
    """A real distinguished root was requested but the polynomial has none."""


class ReducibleDetected(GpnfError):
    """The bounded factor search found a nontrivial factor of the minimal
    polynomial, contradicting the caller's irreducibility assertion."""


class DivisionByZero(GpnfError):
    pass


class FieldMismatch(GpnfError):
    """Arithmetic between elements of different fields."""


class ComplexEmbedding(GpnfError):
    """A real-embedding operation was applied at a complex root index."""


class RealEmbedding(GpnfError):
    """A complex-embedding operation was applied at a real root index."""


# -- expressions ------------------------------------------------------------

class ExprSyntaxError(GpnfError):
    """Parse failure; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownFunction(GpnfError):
    pass


class NonRealFloorArgument(GpnfError):
    """floor/frac/nint/dist applied to a value with nonzero imaginary part."""


class UnboundVariable(GpnfError):
    pass


# -- constructions ----------------------------------------------------------

class DependentBasis(GpnfError):
    pass


class RankNotOne(GpnfError):
    """The unit group of the field does not have rank 1."""


class InvalidRho(GpnfError):
    """The contraction rate does not satisfy 1 < rho < beta with all other
    conjugates of modulus below 1/rho."""


class ThresholdAmbiguous(GpnfError):
    """Certified refinement could not separate a membership score from the
    decision threshold; indicates violated construction invariants."""


# -- linear recurrent sequences ---------------------------------------------

class DegreeMismatch(GpnfError):
    pass


class SingularSystem(GpnfError):
    """The trace linear system was singular (impossible for a squarefree
    characteristic polynomial; internal alarm)."""


class NotPisot(GpnfError):
    """The characteristic polynomial is not the minimal polynomial of a
    Pisot number (or Salem number, where either is accepted)."""


class ZeroSourceSequence(GpnfError):
    pass


class ZeroTraceRep(GpnfError):
    pass


class VandermondeSingular(GpnfError):
    """A recovery-family solve hit a singular system; would mean a vanishing
    conjugate coefficient, contradicting a nonzero sequence."""


class SearchBoundExceeded(GpnfError):
    """The archimedean size of the query forces an index search beyond the
    caller's bound."""


# -- analysis ---------------------------------------------------------------

class RationalSlope(GpnfError):
    pass


class WindowTooShort(GpnfError):
    pass


class DensityHypothesisFailed(GpnfError):
    def __init__(self, level: int, message: str = ""):
        super().__init__(message or f"density hypothesis failed at level {level}")
        self.level = level


class PigeonholeFailed(GpnfError):
    def __init__(self, level: int, message: str = ""):
        super().__init__(message or f"pigeonhole failed at level {level}")
        self.level = level
