import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rotsurf4 import (
    CurvatureClass,
    EmptyDomain,
    G_profile,
    OutOfDomain,
    ProfileSpec,
    admissible_domain,
    rho,
)
from rotsurf4.profiles import G_prime, meridian_slack, rho_prime

NEG, POS, ZERO = CurvatureClass.NEGATIVE, CurvatureClass.POSITIVE, CurvatureClass.ZERO


def test_rho_examples():
    assert rho(ProfileSpec(NEG, C=1, C1=0.5, C2=0.5), 0.0) == 1.0
    assert rho(ProfileSpec(POS, C=2, C1=0, C2=1), np.pi / 8) == pytest.approx(np.sqrt(2) / 2, abs=1e-15)
    assert rho(ProfileSpec(ZERO, C1=0, C2=3), 17.0) == 3.0


def test_rho_vectorised():
    out = rho(ProfileSpec(ZERO, C1=2, C2=1), np.array([0.0, 1.0]))
    np.testing.assert_array_equal(out, [1.0, 3.0])


def test_rho_out_of_domain():
    with pytest.raises(OutOfDomain):
        rho(ProfileSpec(ZERO, C1=-1, C2=1), 2.0)
    with pytest.raises(OutOfDomain):
        rho(ProfileSpec(POS, C=1, C1=1, C2=0), 0.0)


def test_G_profile_examples():
    assert G_profile(ProfileSpec(NEG, C=1, C1=0.5, C2=0.5), 0.0) == 1.0
    assert G_profile(ProfileSpec(ZERO, C1=0.6, C2=1), 0.0) == 1.0
    assert G_profile(ProfileSpec(POS, C=1, C1=1, C2=0), np.pi / 2) == 1.0


def test_G_profile_allows_negative_base():
    assert G_profile(ProfileSpec(ZERO, C1=1, C2=-3), 1.0) == 4.0
    with pytest.raises(OutOfDomain):
        G_profile(ProfileSpec(ZERO, C1=1, C2=-3), 3.0)


@pytest.mark.parametrize("cls, eps, form", [
    (NEG, 1, "exp"), (POS, 1, "trig"), (ZERO, 1, "affine"),
    (NEG, -1, "trig"), (POS, -1, "exp"), (ZERO, -1, "affine"),
])
def test_form_follows_sign_of_eps_times_K(cls, eps, form):
    assert ProfileSpec(cls, C=1.3, eps=eps).form == form


def test_spec_validation():
    with pytest.raises(ValueError):
        ProfileSpec(NEG, C=0.0)
    with pytest.raises(ValueError):
        ProfileSpec(POS, eps=0)
    assert ProfileSpec("zero", C=0.0).curvature_class is ZERO


@pytest.mark.parametrize("cls, target", [(NEG, -2.25), (POS, 2.25), (ZERO, 0.0)])
def test_target_K(cls, target):
    assert ProfileSpec(cls, C=1.5).target_K == target


specs = st.builds(
    ProfileSpec,
    st.sampled_from(list(CurvatureClass)),
    st.floats(0.2, 2.0),
    st.floats(-2, 2),
    st.floats(-2, 2),
    st.sampled_from([1, -1]),
)


@settings(max_examples=60)
@given(specs, st.floats(-1.5, 1.5))
def test_profile_solves_constant_curvature_ode(spec, u):
    # K = -eps rho''/rho, checked with a central second difference
    h = 1e-4
    r = spec.base(u)
    assume(abs(r) > 0.1)
    d2 = (spec.base(u + h) - 2 * r + spec.base(u - h)) / h ** 2
    scale = max(1.0, abs(spec.base(u + h)), abs(spec.base(u - h)))
    assert -spec.eps * d2 / r == pytest.approx(spec.target_K, abs=2e-6 * scale / abs(r))
    # the analytic second derivative satisfies it to roundoff
    assert -spec.eps * spec.base_second(u) / r == pytest.approx(spec.target_K, abs=1e-12 * scale / abs(r))


@settings(max_examples=60)
@given(specs, st.floats(-1.5, 1.5))
def test_analytic_first_derivatives(spec, u):
    h = 1e-6
    fd = (spec.base(u + h) - spec.base(u - h)) / (2 * h)
    scale = max(1.0, abs(spec.base(u)))
    assert rho_prime(spec, u) == pytest.approx(fd, abs=1e-7 * scale)
    assert G_prime(spec, u) == pytest.approx(2 * spec.base(u) * fd, abs=1e-6 * scale ** 2)


@settings(max_examples=60)
@given(specs, st.floats(-1.5, 1.5))
def test_G_is_squared_base(spec, u):
    b = spec.base(u)
    assume(b != 0)
    assert G_profile(spec, u) == b * b


def test_admissible_cosh():
    spec = ProfileSpec(NEG, C=1, C1=0.5, C2=0.5)
    a, b = admissible_domain(spec, "SR1_meridian", (-2, 2))
    assert a == pytest.approx(-np.arcsinh(1), abs=1e-9)
    assert b == pytest.approx(np.arcsinh(1), abs=1e-9)


def test_admissible_affine_whole_window():
    assert admissible_domain(ProfileSpec(ZERO, C1=0.5, C2=1), "SR1_meridian", (0, 1)) == (0.0, 1.0)


def test_admissible_empty():
    with pytest.raises(EmptyDomain):
        admissible_domain(ProfileSpec(ZERO, C1=2, C2=1), "SR1_meridian", (0, 1))


def test_admissible_positive_rho_cut():
    # rho = 1 - u / 2 stays completable but hits the axis at u = 2
    a, b = admissible_domain(ProfileSpec(ZERO, C1=-0.5, C2=1), "SR1_meridian", (0, 3))
    assert a == 0 and b == pytest.approx(2, abs=1e-9) and b < 2


def test_admissible_timelike_sr3_needs_steep_rho():
    # eps = -1: f'^2 + g'^2 = rho'^2 - 1, so |rho'| >= 1
    spec = ProfileSpec(POS, C=2.0, C1=0.5, C2=0.5, eps=-1)   # exp form, rho = cosh(2u)
    a, b = admissible_domain(spec, "SR3_meridian", (0.0, 1.0))
    assert a == pytest.approx(np.arcsinh(0.5) / 2, abs=1e-9) and b == 1.0
    with pytest.raises(EmptyDomain):
        admissible_domain(ProfileSpec(ZERO, C1=0.5, C2=1, eps=-1), "SR3_meridian", (0, 1))


def test_admissible_sr4_roles():
    steep = ProfileSpec(ZERO, C1=3.0, C2=1.0, eps=-1)
    assert admissible_domain(steep, "SR4_meridian", (0, 1)) == (0.0, 1.0)
    with pytest.raises(EmptyDomain):
        admissible_domain(ProfileSpec(ZERO, C1=3.0, C2=1.0, eps=1), "SR4_meridian", (0, 1))


def test_admissible_picks_longest_run():
    # rho = 0.9 sin(u + 0.3): |rho'| < 1 everywhere, rho > 0 on (-0.3, pi - 0.3)
    # and on a shorter piece (-4, -pi - 0.3) of the window
    spec = ProfileSpec(POS, C=1, C1=0.9 * np.cos(0.3), C2=0.9 * np.sin(0.3))
    a, b = admissible_domain(spec, "SR1_meridian", (-4.0, 4.0))
    assert a == pytest.approx(-0.3, abs=1e-9)
    assert b == pytest.approx(np.pi - 0.3, abs=1e-9)


def test_admissible_rejects_empty_request():
    with pytest.raises(ValueError):
        admissible_domain(ProfileSpec(ZERO), "SR1_meridian", (1, 1))


@settings(max_examples=40, deadline=None)
@given(specs, st.sampled_from(["SR1_meridian", "SR3_meridian", "SR4_meridian"]))
def test_admissible_output_is_feasible(spec, role):
    try:
        a, b = admissible_domain(spec, role, (-1.5, 1.5))
    except EmptyDomain:
        return
    us = np.linspace(a, b, 1000)
    assert np.all(spec.base(us) > 0)
    assert np.all(meridian_slack(spec, role, us) >= -1e-9)


def test_shared_lorentzian_role_matches_sr3():
    spec = ProfileSpec(CurvatureClass.POSITIVE, C=1.0, C1=0.5, C2=0.5, eps=-1)
    a = admissible_domain(spec, "SR34_meridian", (0.0, 2.0))
    b = admissible_domain(spec, "SR3_meridian", (0.0, 2.0))
    assert a == b
    assert a[0] == pytest.approx(np.arcsinh(1.0), abs=1e-9)
