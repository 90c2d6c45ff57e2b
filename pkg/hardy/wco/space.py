"""
Weighted Hardy spaces H²(β): weights, inner products, reproducing kernels.

The norm of f = Σ f_n z^n is Σ |f_n|² β(n)², so e_n = z^n / β(n) is an
orthonormal basis and a function's basis coordinates are f_n β(n).

For the family H²(β_κ) with kernel (1 - w̄z)^(-κ), expanding the kernel gives
K_w(z) = Σ binom(n+κ-1, n) w̄^n z^n. Matching this with the general kernel
Σ w̄^n z^n / β(n)² yields β_κ(n)² = 1 / binom(n+κ-1, n).
"""

import logging
from dataclasses import dataclass
from typing import List

import numpy as np
from scipy.special import gammaln, perm

from .errors import BasePointOutsideDisk, InvalidParameter, InvalidWeights
from .models import WeightFamily
from .series import TruncatedSeries, derivative, evaluate, powers

logger = logging.getLogger(__name__)

DIVERGENCE_SLOPE = 1e-3


@dataclass(frozen=True, eq=False)
class WeightSequence:
    """
    The weights β(0..N) of H²(β).

    Attributes:
        beta: Read-only array of positive weights.
        label: Tag such as ``"hardy"`` or ``"beta_kappa(2)"``.
        family: Which family the weights come from.
        kappa: Kernel exponent for the β_κ family, else None.
    """
    beta: np.ndarray
    label: str = "custom"
    family: WeightFamily = WeightFamily.CUSTOM
    kappa: float = None

    def __post_init__(self):
        arr = np.array(self.beta, dtype=float).ravel()
        if arr.size == 0 or not np.all(np.isfinite(arr)) or np.any(arr <= 0):
            raise InvalidWeights(f"weights must be finite and positive ({self.label})")
        arr.flags.writeable = False
        object.__setattr__(self, "beta", arr)

    @property
    def degree(self) -> int:
        return self.beta.size - 1

    def squared(self, n: int = None) -> np.ndarray:
        b = self.beta if n is None else self.beta[: n + 1]
        return b * b

    def require(self, degree: int) -> None:
        if self.degree < degree:
            raise InvalidWeights(
                f"weights {self.label} stop at degree {self.degree}, need {degree}"
            )


def beta_kappa(kappa: float, N: int) -> WeightSequence:
    """
    Weights of H²(β_κ), whose kernel is (1 - w̄z)^(-κ).

    β(n) = binom(n+κ-1, n)^(-1/2), evaluated through log-Gamma so that
    non-integer κ and large n stay stable.

    Args:
        kappa: Kernel exponent, at least 1.
        N: Truncation degree.
    """
    if kappa < 1:
        raise InvalidParameter(f"kappa must be >= 1, got {kappa}")
    n = np.arange(N + 1)
    log_binom = gammaln(n + kappa) - gammaln(kappa) - gammaln(n + 1)
    if kappa == 1:
        family, label = WeightFamily.HARDY, "hardy"
    elif kappa == 2:
        family, label = WeightFamily.BERGMAN, "bergman"
    else:
        family, label = WeightFamily.BETA_KAPPA, f"beta_kappa({kappa:g})"
    return WeightSequence(np.exp(-0.5 * log_binom), label=label, family=family, kappa=float(kappa))


def hardy(N: int) -> WeightSequence:
    return beta_kappa(1, N)


def bergman(N: int) -> WeightSequence:
    return beta_kappa(2, N)


def dirichlet(N: int) -> WeightSequence:
    """Dirichlet-type weights β(n) = sqrt(n+1)."""
    return WeightSequence(np.sqrt(np.arange(1, N + 2)), label="dirichlet", family=WeightFamily.DIRICHLET)


def inner_product(f: TruncatedSeries, g: TruncatedSeries, w: WeightSequence) -> complex:
    """
    ⟨f, g⟩ = Σ f_n conj(g_n) β(n)² over the common degree.

    Real and imaginary parts are accumulated separately so that
    ⟨f, g⟩ == conj(⟨g, f⟩) holds bit for bit.
    """
    n = min(f.trunc_degree, g.trunc_degree, w.degree) + 1
    x, y, b2 = f.coeffs[:n], g.coeffs[:n], w.squared()[:n]
    re = np.sum((x.real * y.real + x.imag * y.imag) * b2)
    im = np.sum((x.imag * y.real - x.real * y.imag) * b2)
    return complex(re, im)


def norm(f: TruncatedSeries, w: WeightSequence) -> float:
    return float(np.sqrt(inner_product(f, f, w).real))


@dataclass(frozen=True, eq=False)
class KernelVector:
    """
    Truncation of K_w^{(n)}, the element with ⟨f, K_w^{(n)}⟩ = f^{(n)}(w).

    Attributes:
        w: Base point in the disk.
        order: Derivative order n.
        coeffs: The kernel as a truncated series.
        weights: Weights the kernel belongs to.
    """
    w: complex
    order: int
    coeffs: TruncatedSeries
    weights: WeightSequence

    def evaluate(self, z: complex) -> complex:
        return evaluate(self.coeffs, z)

    def coordinates(self) -> np.ndarray:
        """Coordinates in the orthonormal basis e_m = z^m / β(m)."""
        n = self.coeffs.trunc_degree + 1
        return self.coeffs.coeffs * self.weights.beta[:n]

    def norm(self) -> float:
        return norm(self.coeffs, self.weights)


def kernel(w: complex, order: int, weights: WeightSequence, N: int) -> KernelVector:
    """
    K_w^{(order)} truncated to degree N.

    The coefficient of z^m is m!/(m-order)! * conj(w)^(m-order) / β(m)² for
    m >= order and zero below.

    Raises:
        BasePointOutsideDisk: If |w| >= 1.
    """
    if abs(w) >= 1:
        raise BasePointOutsideDisk(f"kernel base point must lie in the disk, got |w| = {abs(w):.6g}")
    if order < 0:
        raise InvalidParameter(f"kernel order must be nonnegative, got {order}")
    weights.require(N)
    m = np.arange(N + 1)
    coeffs = np.zeros(N + 1, dtype=complex)
    tail = m >= order
    if order <= N:
        conj_powers = powers(np.conj(complex(w)), N - order)
        coeffs[tail] = perm(m[tail], order) * conj_powers / weights.squared(N)[tail]
    return KernelVector(complex(w), order, TruncatedSeries(coeffs), weights)


def reproducing_check(f: TruncatedSeries, w: complex, order: int, weights: WeightSequence) -> float:
    """
    Residual |⟨f, K_w^{(order)}⟩ - f^{(order)}(w)|.

    The kernel is truncated at the weights' degree, so a series longer than
    the weights reports its tail beyond that degree.
    """
    k = kernel(w, order, weights, weights.degree)
    d = f
    for _ in range(order):
        d = derivative(d)
    return abs(inner_product(f, k.coeffs, weights) - evaluate(d, w))


def norm_profile(f: TruncatedSeries, weights: WeightSequence) -> List[float]:
    """Partial norms P_m = Σ_{n<=m} |f_n|² β(n)² for m = 0..N."""
    n = min(f.trunc_degree, weights.degree) + 1
    terms = np.abs(f.coeffs[:n]) ** 2 * weights.squared()[:n]
    return np.cumsum(terms).tolist()


def tail_slope(profile: List[float]) -> float:
    """Mean increment of the norm profile over its last quartile."""
    p = np.asarray(profile, dtype=float)
    if p.size < 2:
        return 0.0
    increments = np.diff(p)
    start = min((3 * p.size) // 4, increments.size - 1)
    return float(np.mean(increments[start:]))


def divergence_flag(profile: List[float], threshold: float = DIVERGENCE_SLOPE) -> bool:
    """
    Heuristic non-membership flag: the last-quartile slope exceeds ``threshold``.

    A truncation cannot decide membership; this only reports partial norms
    that are still growing.
    """
    slope = tail_slope(profile)
    logger.debug("norm profile tail slope %.3g (threshold %.3g)", slope, threshold)
    return slope > threshold
