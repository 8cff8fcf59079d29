"""Error hierarchy. Every domain failure derives from :class:`OrthoError`."""


class OrthoError(ValueError):
    """Base class for domain errors (CLI exit code 2)."""


class InsufficientMoments(OrthoError):
    pass


class SingularHankel(OrthoError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class InsufficientCoefficients(OrthoError):
    pass


class RegularityViolation(OrthoError):
    pass


class UnsupportedFamily(OrthoError):
    pass


class DegeneratePair(OrthoError):
    pass


class OutOfSupport(OrthoError):
    pass


class NotPositiveDefinite(OrthoError):
    pass


class ConvergenceFailure(OrthoError):
    pass


class PoleHit(OrthoError):
    pass


class OnCut(OrthoError):
    pass


class QuadratureFailure(OrthoError):
    pass


class PoleAt(OrthoError):
    pass


class InvalidSpec(OrthoError):
    pass


class DivergentSeries(OrthoError):
    pass


class NoConvergence(OrthoError):
    pass


class NotTerminating(OrthoError):
    pass


class ConstraintViolated(OrthoError):
    pass


class ParameterDomain(OrthoError):
    pass


class Overflow(OrthoError):
    pass
