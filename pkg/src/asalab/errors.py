"""Semantic exception hierarchy.

Every error raised by the library derives from :class:`AsaLabError`, so
callers (CLI, service) can map domain failures to exit codes / HTTP status
without string matching.
"""


class AsaLabError(Exception):
    """Base class for all library errors."""


class InvalidFunctionError(AsaLabError):
    """Evaluator returned non-finite or non-positive values on the probe grid."""


class ParameterError(AsaLabError, ValueError):
    """A builtin family or operation received an out-of-range parameter."""


class BodyConstructionError(AsaLabError):
    """A body spec violates a construction invariant."""


class NotStarShapedError(BodyConstructionError):
    """Support samples are not strictly positive (origin not interior)."""


class NonConvexError(BodyConstructionError):
    """Curvature radius drops below the configured floor."""


class OriginError(BodyConstructionError):
    """Polygon does not contain the origin strictly inside."""


class DimensionMismatchError(AsaLabError):
    """Binary operation applied to bodies of different dimensions."""


class UnsupportedBodyError(AsaLabError):
    """Operation not available for this body representation / dimension."""


class ResamplingError(AsaLabError):
    """Angular resampling failed (boundary angles not monotone)."""


class GeneratorBudgetError(AsaLabError):
    """Random body rejection sampling exhausted its retry budget."""


class QuadratureError(AsaLabError):
    """Numerical evaluation of a boundary integral is not possible."""


class ClassMismatchError(AsaLabError):
    """Function class does not match the requested functional."""


class UncenteredBodyError(AsaLabError):
    """Operation requires a body with centroid at the origin."""


class InternalConsistencyError(AsaLabError):
    """A certified fence was violated; indicates an implementation bug."""


class UnknownSuiteError(AsaLabError, ValueError):
    """Verification suite name not recognized."""
