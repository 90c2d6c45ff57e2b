import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardy.wco.errors import InnerConstantTooLarge, NotInvertible
from hardy.wco.maps import MobiusMap, compose_maps, to_series
from hardy.wco.series import (
    TruncatedSeries,
    compose,
    constant,
    derivative,
    evaluate,
    from_coeffs,
    geometric,
    identity,
    max_deviation,
    multiply,
    power,
    reciprocal,
    revert,
    truncate,
)

small = st.floats(min_value=-0.5, max_value=0.5, allow_nan=False)
small_complex = st.builds(complex, small, small)


def series_strategy(degree):
    return st.lists(small_complex, min_size=degree + 1, max_size=degree + 1).map(from_coeffs)


def test_coefficients_are_read_only():
    s = from_coeffs([1, 2, 3])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_multiply_truncates_to_smaller_degree():
    a = from_coeffs([1, 1, 1, 1])
    b = from_coeffs([1, -1])
    assert multiply(a, b).trunc_degree == 1
    np.testing.assert_array_equal(multiply(a, b).coeffs, [1, 0])


def test_compose_with_identity():
    f = geometric(0.5 + 0.2j, 10)
    assert max_deviation(compose(f, identity(10)), f) == 0
    assert max_deviation(compose(identity(10), f * 0.1), f * 0.1) == 0


def test_compose_rejects_large_inner_constant():
    with pytest.raises(InnerConstantTooLarge):
        compose(geometric(0.5, 4), from_coeffs([1.0, 0.5]))


def test_compose_inner_constant_polynomial_outer():
    # (1 + z)² at z = 0.5 + z is 2.25 + 3z + z²
    outer = from_coeffs([1, 2, 1])
    inner = from_coeffs([0.5, 1, 0])
    np.testing.assert_allclose(compose(outer, inner).coeffs, [2.25, 3, 1])


def test_geometric_composition_matches_mobius():
    f = MobiusMap(1, 0.2, 0.3, 1)
    g = MobiusMap(0.5, 0, 0.2, 1)
    lhs = compose(to_series(f, 16), to_series(g, 16))
    assert max_deviation(lhs, to_series(compose_maps(f, g), 16)) < 1e-13


def test_revert_geometric():
    s = from_coeffs([0] + [1] * 12)
    r = revert(s)
    expected = [0] + [(-1) ** (n - 1) for n in range(1, 13)]
    np.testing.assert_allclose(r.coeffs, expected, atol=1e-12)


def test_revert_requires_zero_constant():
    with pytest.raises(NotInvertible):
        revert(from_coeffs([0.1, 1, 0]))
    with pytest.raises(NotInvertible):
        revert(from_coeffs([0, 0, 1]))


def test_reciprocal_of_one_minus_z():
    r = reciprocal(from_coeffs([1, -1, 0, 0, 0]))
    np.testing.assert_allclose(r.coeffs, [1, 1, 1, 1, 1])
    with pytest.raises(NotInvertible):
        reciprocal(from_coeffs([0, 1]))


def test_power_and_derivative():
    s = from_coeffs([1, 1, 0, 0])
    np.testing.assert_allclose(power(s, 3).coeffs, [1, 3, 3, 1])
    np.testing.assert_allclose(derivative(power(s, 3)).coeffs, [3, 6, 3])
    assert derivative(constant(2, 0)).trunc_degree == 0


def test_square_of_half_geometric():
    sq = multiply(geometric(0.5, 8), geometric(0.5, 8))
    np.testing.assert_allclose(sq.coeffs[:3], [1, 1, 0.75])
    np.testing.assert_allclose(sq.coeffs, [(n + 1) * 0.5**n for n in range(9)])


def test_evaluate_geometric_at_one_half():
    value = evaluate(geometric(1, 50), 0.5)
    assert abs(value - 2) <= 2.0**-49


def test_truncate_pads_and_cuts():
    s = from_coeffs([1, 2, 3])
    assert truncate(s, 5).trunc_degree == 5
    np.testing.assert_array_equal(truncate(s, 1).coeffs, [1, 2])


def test_evaluate_outside_disk_warns(caplog):
    with caplog.at_level("WARNING", logger="hardy.wco.series"):
        assert evaluate(from_coeffs([1, 1]), 2) == 3
    assert "outside the disk" in caplog.text


def test_operators_on_series():
    a = from_coeffs([1, 2])
    b = from_coeffs([3, 4])
    assert isinstance(a + b, TruncatedSeries)
    np.testing.assert_array_equal((a - b).coeffs, [-2, -2])
    np.testing.assert_array_equal((2 * a).coeffs, [2, 4])
    np.testing.assert_array_equal((-a).coeffs, [-1, -2])
    assert a(0.5) == 2


@settings(max_examples=40, deadline=None)
@given(series_strategy(6), series_strategy(6))
def test_multiply_commutes(a, b):
    assert max_deviation(multiply(a, b), multiply(b, a)) < 1e-15


@settings(max_examples=40, deadline=None)
@given(series_strategy(6), series_strategy(6), series_strategy(6))
def test_multiply_associative(a, b, c):
    lhs = multiply(multiply(a, b), c)
    rhs = multiply(a, multiply(b, c))
    size = max(1.0, float(np.max(np.abs(lhs.coeffs))))
    assert max_deviation(lhs, rhs) <= 1e-13 * size


@settings(max_examples=40, deadline=None)
@given(series_strategy(8), series_strategy(8))
def test_product_rule(f, g):
    lhs = derivative(multiply(f, g))
    rhs = multiply(derivative(f), g) + multiply(f, derivative(g))
    size = max(1.0, float(np.max(np.abs(lhs.coeffs))))
    assert max_deviation(lhs, rhs) <= 1e-12 * size


@settings(max_examples=40, deadline=None)
@given(series_strategy(6), series_strategy(6), series_strategy(6))
def test_compose_associative_when_inner_fixes_zero(f, g, h):
    g = truncate(from_coeffs(np.concatenate([[0], g.coeffs[1:]])), 6)
    h = truncate(from_coeffs(np.concatenate([[0], h.coeffs[1:]])), 6)
    lhs = compose(compose(f, g), h)
    rhs = compose(f, compose(g, h))
    scale = max(1.0, np.max(np.abs(f.coeffs))) * max(1.0, np.max(np.abs(g.coeffs))) * max(1.0, np.max(np.abs(h.coeffs)))
    assert max_deviation(lhs, rhs) <= 1e-13 * scale


@settings(max_examples=30, deadline=None)
@given(small_complex.filter(lambda c: abs(c) > 0.3), series_strategy(8))
def test_revert_is_compositional_inverse(lead, tail):
    coeffs = np.array(tail.coeffs)
    coeffs[0], coeffs[1] = 0, lead
    s = from_coeffs(coeffs)
    r = revert(s)
    assert max_deviation(compose(s, r), identity(8)) < 1e-8
