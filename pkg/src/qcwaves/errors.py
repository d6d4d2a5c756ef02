"""Exception types raised across the library.

Everything derives from ``QcError`` so callers can catch the whole family;
the material subfamily additionally derives from ``InvalidMaterial``.
"""


class QcError(ValueError):
    """Base class for all qcwaves errors."""


class InvalidMaterial(QcError):
    """Material constants violate the well-posedness conditions."""


class NonPositiveModulus(InvalidMaterial):
    """c44 or K2 is not strictly positive, or R3 is negative."""


class CouplingTooStrong(InvalidMaterial):
    """c44*K2 - R3**2 <= 0: the material matrix is not positive definite."""


class NonPositiveDensity(InvalidMaterial):
    """Mass density is not strictly positive."""


class NonPositiveFrequency(QcError):
    """Angular frequency must be > 0; the static case is out of scope."""


class DomainError(QcError):
    """Special-function argument outside the supported domain."""


class SourceCoincidesWithField(QcError):
    """Field point too close to the source; the kernel is singular."""


class NonUnitNormal(QcError):
    """Normal vector is not of unit length."""


class SourceOnBoundary(QcError):
    """Half-plane source sits exactly on x2 = 0; the image degenerates."""


class SourceOutsideHalfPlane(QcError):
    """Half-plane source has x2 > 0."""


class PointOutsideHalfPlane(QcError):
    """Evaluation point has x2 > 0 in a half-plane setting."""


class StencilOutOfDomain(QcError):
    """A finite-difference stencil point could not be evaluated."""


class RadiusTooLarge(QcError):
    """Contour radius too large for the small-circle flux check."""


class ParseError(QcError):
    """Scenario or material document could not be parsed."""


class ValidationError(QcError):
    """Scenario or material document violates an invariant."""


class EvaluationError(QcError):
    """A kernel evaluation failed; the message names the offending point."""
