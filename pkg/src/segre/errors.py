"""Exception types shared across the package."""


class SegreError(Exception):
    """Base class for all package-specific errors."""


class DegeneratePencilError(SegreError):
    """The pencil determinant |U - lambda*V| vanishes identically."""


class NoSmoothMemberError(DegeneratePencilError):
    """No member of the pencil is a nonsingular quadric.

    Equivalent to the binary form det(x*U + y*V) being identically zero,
    so the base locus cannot be a quartic surface of the catalog.
    """


class IllConditionedError(SegreError):
    """The floating-point oracle refuses to answer rather than guess."""


class InternalConsistencyError(SegreError):
    """A cross-check identity that must hold by theory failed.

    Raised e.g. when a hyperplane-section divisor does not sum to the
    class degree; indicates corrupted catalog data or a bug, never user error.
    """


class ParseError(SegreError, ValueError):
    """Malformed quadratic-form expression or matrix file."""


class DegreeError(ParseError):
    """A term of the input polynomial is not of degree exactly two."""


class ZeroFormError(ParseError):
    """The parsed quadratic form is identically zero."""
