import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotsurf4 import (
    CurvatureClass,
    DomainMargin,
    MetricSignature,
    ProfileSpec,
    build_surface,
    complete_meridian,
    custom_patch,
    inner_product,
    partial_derivative,
)

E4, L4 = MetricSignature.EUCLIDEAN4, MetricSignature.LORENTZ4
vec = st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=4, max_size=4)


@pytest.mark.parametrize("sig, x, y, expected", [
    (E4, (1, 0, 0, 0), (1, 0, 0, 0), 1.0),
    (L4, (0, 0, 0, 1), (0, 0, 0, 1), -1.0),
    (L4, (1, 1, 1, 1), (1, 1, 1, 1), 2.0),
    (E4, (1, 2, 3, 4), (1, 2, 3, 4), 30.0),
])
def test_inner_product_examples(sig, x, y, expected):
    assert inner_product(sig, x, y) == expected


@pytest.mark.parametrize("i", range(3))
def test_lorentz_spacelike_basis(i):
    e = np.eye(4)[i]
    assert inner_product(L4, e, e) == 1.0


@given(vec, vec, st.sampled_from([E4, L4]))
def test_inner_product_symmetric(x, y, sig):
    assert inner_product(sig, x, y) == inner_product(sig, y, x)


@given(vec, vec, vec, st.floats(-10, 10), st.sampled_from([E4, L4]))
def test_inner_product_bilinear(x, y, z, a, sig):
    x, y, z = map(np.array, (x, y, z))
    lhs = inner_product(sig, a * x + y, z)
    rhs = a * inner_product(sig, x, z) + inner_product(sig, y, z)
    assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-6)


@given(vec.filter(lambda x: any(abs(t) > 1e-3 for t in x)))
def test_euclidean_positive_definite(x):
    assert inner_product(E4, x, x) > 0


def test_inner_product_broadcasts():
    x = np.arange(12.0).reshape(3, 4)
    out = inner_product(L4, x, x)
    assert out.shape == (3,)
    assert out[1] == 16 + 25 + 36 - 49


def _sr1_cylinder():
    spec = ProfileSpec(CurvatureClass.ZERO, C1=0.0, C2=1.0)
    return build_surface("sr1", complete_meridian(spec, "sr1", (-1.0, 1.0)), (-1.0, 1.0))


def test_partial_v_of_sr1_cylinder():
    d = partial_derivative(_sr1_cylinder(), "v", (0.0, 0.0), 1e-4)
    np.testing.assert_allclose(d, [0, 0, 0, 1], atol=1e-8)


@pytest.mark.parametrize("point", [(0.0, 0.0), (0.5, -0.3), (-0.7, 0.9)])
def test_partial_u_of_sr1_cylinder(point):
    d = partial_derivative(_sr1_cylinder(), "u", point, 1e-4)
    np.testing.assert_allclose(d, [1, 0, 0, 0], atol=1e-8)


def test_partial_v_of_sr4():
    spec = ProfileSpec(CurvatureClass.ZERO, C1=0.0, C2=1.0, eps=1)
    patch = build_surface("sr4", complete_meridian(spec, "sr4", (-1.0, 1.0)), (-1.0, 1.0))
    d = partial_derivative(patch, "v", (0.0, 0.0), 1e-4)
    np.testing.assert_allclose(d, [0, 1, 0, 0], atol=1e-8)


def test_partial_derivative_margin():
    patch = custom_patch(lambda u, v: (u, v, 0, 0), (0, 1), (0, 1))
    with pytest.raises(DomainMargin):
        partial_derivative(patch, "u", (0.00005, 0.5), 1e-4)
    with pytest.raises(DomainMargin):
        partial_derivative(patch, "v", (0.5, 1.0), 1e-4)


def test_partial_derivative_rejects_bad_args():
    patch = custom_patch(lambda u, v: (u, v, 0, 0), (0, 1), (0, 1))
    with pytest.raises(ValueError):
        partial_derivative(patch, "u", (0.5, 0.5), 0.0)
    with pytest.raises(ValueError):
        partial_derivative(patch, "w", (0.5, 0.5), 1e-3)


def test_partial_derivative_second_order():
    patch = custom_patch(lambda u, v: (np.exp(u) * np.cos(v), np.sin(u * v), u ** 3, v),
                         (-2, 2), (-2, 2))
    p = (0.4, 0.7)
    exact = np.array([np.exp(0.4) * np.cos(0.7), 0.7 * np.cos(0.28), 3 * 0.16, 0.0])
    errs = [np.linalg.norm(partial_derivative(patch, "u", p, h) - exact) for h in (0.02, 0.01, 0.005)]
    for coarse, fine in zip(errs, errs[1:]):
        assert 3.5 < coarse / fine < 4.5


def test_patch_accepts_trailing_axis_arrays():
    patch = custom_patch(lambda u, v: np.stack([u, v, u * v, u + v], axis=-1), (0, 1), (0, 1))
    out = patch(np.array([0.1, 0.2]), 0.5)
    np.testing.assert_allclose(out, [[0.1, 0.5, 0.05, 0.6], [0.2, 0.5, 0.1, 0.7]])


@settings(max_examples=30)
@given(st.floats(0.1, 0.9), st.floats(0.1, 0.9))
def test_patch_scalar_and_grid_agree(u, v):
    patch = custom_patch(lambda u, v: (np.cos(u), np.sin(v), u * v, 1.0), (0, 1), (0, 1))
    grid = patch(np.array([[u]]), np.array([[v]]))
    np.testing.assert_array_equal(grid[0, 0], patch(u, v))
