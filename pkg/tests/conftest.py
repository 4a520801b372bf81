import numpy as np
import pytest

from rotsurf4 import (
    CurvatureClass,
    MetricSignature,
    ProfileSpec,
    build_surface,
    complete_meridian,
    custom_patch,
)

ASINH1 = float(np.arcsinh(1.0))


@pytest.fixture
def plane():
    return custom_patch(lambda u, v: (u, v, 0.0, 0.0), (-1.0, 1.0), (-1.0, 1.0))


@pytest.fixture
def sphere_spec():
    return ProfileSpec(CurvatureClass.POSITIVE, C=1.0, C1=1.0, C2=0.0)


@pytest.fixture
def sphere(sphere_spec):
    """Unit sphere: rho = sin u, f = 1 - cos u, g = 0."""
    m = complete_meridian(sphere_spec, "sr1", (0.3, np.pi - 0.3))
    return build_surface("sr1", m)


@pytest.fixture
def sphere_closed_form():
    """Same sphere written out by hand, no quadrature involved."""
    return custom_patch(
        lambda u, v: (1 - np.cos(u), 0.0, np.sin(u) * np.cos(v), np.sin(u) * np.sin(v)),
        (0.0, np.pi), (0.0, 2 * np.pi),
    )


@pytest.fixture
def pseudosphere_like():
    """rho = cosh u (K = -1) on its feasible window |u| < asinh(1)."""
    spec = ProfileSpec(CurvatureClass.NEGATIVE, C=1.0, C1=0.5, C2=0.5)
    m = complete_meridian(spec, "sr1", (-0.85, 0.85))
    return build_surface("sr1", m)


@pytest.fixture
def lorentz():
    return MetricSignature.LORENTZ4
