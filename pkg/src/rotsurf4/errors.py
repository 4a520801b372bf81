"""Exception hierarchy shared by all modules."""


class SurfaceError(Exception):
    """Base class for every error raised by rotsurf4."""


class DomainMargin(SurfaceError, ValueError):
    """A finite-difference stencil would leave the patch domain."""


class DegeneratePoint(SurfaceError):
    """|E| or |G| fell below the degeneracy threshold."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class NotOrthogonal(SurfaceError):
    """|F| exceeded the orthogonality tolerance."""

    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class OutOfDomain(SurfaceError, ValueError):
    """A profile was evaluated where it is not positive / nonzero."""


class EmptyDomain(SurfaceError, ValueError):
    """No subinterval satisfies the feasibility predicates."""


class InfeasibleDomain(SurfaceError, ValueError):
    """The arc-length integrand is negative somewhere on the domain."""


class NegativeDiscriminant(SurfaceError, ValueError):
    """The quadratic for phi' has no real root."""

    def __init__(self, message, u=None):
        super().__init__(message)
        self.u = u


class NegativeRadicand(SurfaceError, ValueError):
    """The closed-form quadrature integrand is not real."""

    def __init__(self, message, u=None):
        super().__init__(message)
        self.u = u


class AllDegenerate(SurfaceError):
    """Every point of a verification grid was degenerate."""
