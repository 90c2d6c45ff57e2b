import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import binom

from hardy.wco.errors import BasePointOutsideDisk, InvalidParameter, InvalidWeights
from hardy.wco.models import WeightFamily
from hardy.wco.series import from_coeffs, geometric, identity
from hardy.wco.space import (
    WeightSequence,
    bergman,
    beta_kappa,
    dirichlet,
    divergence_flag,
    hardy,
    inner_product,
    kernel,
    norm,
    norm_profile,
    reproducing_check,
    tail_slope,
)

small = st.floats(min_value=-1, max_value=1, allow_nan=False)
coeff_lists = st.lists(st.builds(complex, small, small), min_size=9, max_size=9)


def test_hardy_weights_are_one():
    w = hardy(10)
    np.testing.assert_allclose(w.beta, np.ones(11), rtol=1e-15)
    assert w.family is WeightFamily.HARDY
    assert w.label == "hardy"
    assert w.degree == 10


def test_bergman_weights():
    w = bergman(20)
    np.testing.assert_allclose(w.squared(), 1 / np.arange(1, 22), rtol=1e-12)
    assert w.family is WeightFamily.BERGMAN


@pytest.mark.parametrize("kappa", [1.5, 3.0, 7.25])
def test_beta_kappa_matches_binomial(kappa):
    w = beta_kappa(kappa, 40)
    n = np.arange(41)
    np.testing.assert_allclose(w.squared() * binom(n + kappa - 1, n), 1, rtol=1e-12)
    assert w.kappa == kappa
    assert w.label == f"beta_kappa({kappa:g})"


def test_beta_kappa_rejects_small_kappa():
    with pytest.raises(InvalidParameter):
        beta_kappa(0.5, 4)


def test_weights_must_be_positive():
    with pytest.raises(InvalidWeights):
        WeightSequence([1.0, 0.0, 1.0])
    with pytest.raises(InvalidWeights):
        WeightSequence([])
    with pytest.raises(ValueError):
        WeightSequence([1.0, float("nan")])


def test_weights_require_degree():
    with pytest.raises(InvalidWeights):
        hardy(4).require(5)
    hardy(4).require(4)


def test_dirichlet_weights():
    np.testing.assert_allclose(dirichlet(5).beta, np.sqrt(np.arange(1, 7)))


def test_norm_of_monomials():
    w = bergman(8)
    for n in range(9):
        coeffs = np.zeros(9)
        coeffs[n] = 1
        assert norm(from_coeffs(coeffs), w) == pytest.approx(1 / np.sqrt(n + 1), rel=1e-12)


@settings(max_examples=50, deadline=None)
@given(coeff_lists, coeff_lists)
def test_inner_product_conjugate_symmetric(a, b):
    f, g = from_coeffs(a), from_coeffs(b)
    w = beta_kappa(1.5, 8)
    assert inner_product(f, g, w) == inner_product(g, f, w).conjugate()


def test_kernel_coefficients_on_hardy():
    k = kernel(0.5j, 0, hardy(5), 5)
    np.testing.assert_allclose(k.coeffs.coeffs, (-0.5j) ** np.arange(6))
    assert k.evaluate(0) == 1


def test_kernel_rejects_bad_input():
    with pytest.raises(BasePointOutsideDisk):
        kernel(1.0, 0, hardy(4), 4)
    with pytest.raises(InvalidParameter):
        kernel(0.2, -1, hardy(4), 4)


def test_kernel_order_beyond_degree_is_zero():
    k = kernel(0.3, 6, hardy(4), 4)
    assert not np.any(k.coeffs.coeffs)


@pytest.mark.parametrize("kappa", [1.0, 1.5, 2.0])
@pytest.mark.parametrize("order", [0, 1, 2])
def test_reproducing_property(kappa, order):
    f = from_coeffs([1, -0.5, 0.25j, 0.3, 0, 0.1])
    assert reproducing_check(f, 0.5 + 0.2j, order, beta_kappa(kappa, 32)) < 1e-12


@pytest.mark.parametrize("kappa", [1.0, 2.0, 3.0])
def test_kernel_norm_closed_form(kappa):
    w = 0.6j
    k = kernel(w, 0, beta_kappa(kappa, 256), 256)
    exact = (1 - abs(w) ** 2) ** (-kappa)
    assert k.norm() ** 2 == pytest.approx(exact, rel=1e-12)


def test_coordinates_are_scaled_coefficients():
    w = bergman(6)
    k = kernel(0.4, 1, w, 6)
    np.testing.assert_allclose(k.coordinates(), k.coeffs.coeffs * w.beta)


def test_norm_profile_and_slope():
    profile = norm_profile(from_coeffs([1] * 17), hardy(16))
    assert profile == list(range(1, 18))
    assert tail_slope(profile) == pytest.approx(1.0)
    assert divergence_flag(profile)
    assert tail_slope([2.0]) == 0.0


def test_convergent_profile_not_flagged():
    f = geometric(0.5, 32) * identity(32)
    assert not divergence_flag(norm_profile(f, hardy(32)))
