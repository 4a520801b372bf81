"""Constant Gaussian curvature rotational surfaces in R^4 and R^4_1.

Build the four rotational families from closed-form profiles, solve the
meridian equation of the general rotational surfaces, and check constancy
of K numerically from the first fundamental form alone.
"""

from .builder import MeridianCurve, build_sr2, build_surface, complete_meridian
from .curvature import (
    FundamentalForm,
    curvature_grid,
    fundamental_form,
    gaussian_curvature,
)
from .errors import (
    AllDegenerate,
    DegeneratePoint,
    DomainMargin,
    EmptyDomain,
    InfeasibleDomain,
    NegativeDiscriminant,
    NegativeRadicand,
    NotOrthogonal,
    OutOfDomain,
    SurfaceError,
)
from .export import ExportFormat, Projection, export_grid
from .geometry import Family, MetricSignature, SurfacePatch, custom_patch, inner_product, partial_derivative
from .meridian_ode import (
    MeridianSolution,
    Method,
    integrate_phi,
    ode_coefficients,
    quadrature_phi,
    solve_phi_prime,
)
from .profiles import CurvatureClass, MeridianRole, ProfileSpec, G_profile, admissible_domain, rho
from .verify import CurvatureReport, verify_constant_curvature

__version__ = "0.1.0"
