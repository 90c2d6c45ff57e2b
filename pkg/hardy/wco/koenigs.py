"""
Koenigs eigenfunctions of self-maps with an interior attracting fixed point.

If phi fixes w0 in the disk with 0 < |phi'(w0)| < 1, there is an analytic
kappa with kappa∘phi = phi'(w0) kappa, unique up to a scalar. Everything here
works on the recentred symbol phî = sigma∘phi∘sigma, where
sigma(z) = (w0 - z)/(1 - conj(w0) z) is the involution swapping 0 and w0, so
the fixed point sits at the origin and series compositions are exact.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Union

import numpy as np

from .errors import (
    BoundaryFixedPoint,
    DerivativeNotContractive,
    DerivativeZero,
    DivergentKoenigsNorm,
    InvalidParameter,
    NoConvergence,
)
from .maps import FixedPointInfo, MobiusMap, compose_maps, involutive_automorphism, to_series
from .operator import OperatorMatrix, spectrum
from .series import (
    TruncatedSeries,
    compose,
    constant,
    evaluate,
    max_deviation,
    multiply,
    reciprocal,
    revert,
    scale,
    subtract,
    truncate,
)
from .space import DIVERGENCE_SLOPE, WeightSequence, divergence_flag, kernel, norm, norm_profile, tail_slope

logger = logging.getLogger(__name__)

CONVERGENCE_TOL = 1e-12
MAX_ITER = 200
UNDERFLOW = 1e-250

Symbol = Union[MobiusMap, TruncatedSeries]


@dataclass(frozen=True)
class KoenigsResult:
    """
    Normalized Koenigs eigenfunction of a recentred symbol.

    Attributes:
        kappa_series: kappa in the recentred variable; kappa(0) = 0, kappa'(0) = 1.
        lambda_: phi'(w0).
        w0: The interior fixed point.
        iterations: Doubling steps taken.
        schroeder_residual: max coefficient of kappa∘phî - lambda*kappa.
    """
    kappa_series: TruncatedSeries
    lambda_: complex
    w0: complex
    iterations: int
    schroeder_residual: float

    def to_dict(self) -> Dict:
        return {
            "kappa": self.kappa_series.coeffs.tolist(),
            "lambda": self.lambda_,
            "w0": self.w0,
            "iterations": self.iterations,
            "schroeder_residual": self.schroeder_residual,
        }


@dataclass(frozen=True)
class PowerMembership:
    power: int
    tail_slope: float
    divergent: bool


@dataclass(frozen=True)
class ConsistencyReport:
    """|kappa(0)| of the unit-norm Koenigs function against the kernel obstruction."""
    lhs: float
    rhs: float
    residual: float


@dataclass(frozen=True)
class EigenvalueDecay:
    """
    Leading eigenvalue moduli of a truncated matrix and their successive ratios.

    A heuristic only: truncated spectra say nothing rigorous about the
    essential spectral radius.
    """
    moduli: List[float]
    ratios: List[float]
    rigorous: bool = False


def _apply_involution(w0: complex, g: TruncatedSeries) -> TruncatedSeries:
    # (w0 - g)/(1 - conj(w0) g) by series arithmetic, exact to truncation
    one = constant(1, g.trunc_degree)
    numerator = subtract(constant(w0, g.trunc_degree), g)
    return multiply(numerator, reciprocal(subtract(one, scale(g, np.conj(w0)))))


def _pin_origin(s: TruncatedSeries) -> TruncatedSeries:
    coeffs = np.array(s.coeffs)
    coeffs[0] = 0
    return TruncatedSeries(coeffs)


def recentered_symbol(phi: Symbol, fp: FixedPointInfo, N: int) -> TruncatedSeries:
    """
    sigma∘phi∘sigma through degree N; it fixes the origin.

    Mobius symbols are conjugated exactly as maps. Series symbols are taken
    as polynomials and composed with the series of sigma. The constant term
    is set to exactly 0.
    """
    w0 = complex(fp.w0)
    if isinstance(phi, MobiusMap):
        if w0 == 0:
            return _pin_origin(to_series(phi, N))
        sigma = involutive_automorphism(w0)
        return _pin_origin(to_series(compose_maps(sigma, compose_maps(phi, sigma)), N))
    if w0 == 0:
        return _pin_origin(truncate(phi, N))
    inner = compose(truncate(phi, N), to_series(involutive_automorphism(w0), N))
    return _pin_origin(_apply_involution(w0, inner))


def koenigs_iterate(phi: Symbol, fp: FixedPointInfo, N: int, max_iter: int = MAX_ITER) -> KoenigsResult:
    """
    Koenigs eigenfunction of ``phi`` at its interior fixed point.

    With G_k = phî^{∘k} and kappa_k = G_k / lambda^k, each step doubles k:

        kappa_{2k} = kappa_k ∘ G_k / lambda^k,   G_{2k} = G_k ∘ G_k.

    Stops when successive kappa differ by less than 1e-12 in sup-coefficient
    norm (relative to max(1, max|kappa_k|)).

    Raises:
        BoundaryFixedPoint: If the fixed point is on the circle.
        DerivativeZero: If |lambda| < 1e-14.
        DerivativeNotContractive: If |lambda| >= 1 - 1e-12.
        NoConvergence: If ``max_iter`` steps do not settle.
    """
    if not fp.interior:
        raise BoundaryFixedPoint(f"Koenigs function needs an interior fixed point, got w0 = {fp.w0:.6g}")
    lam = complex(fp.derivative_at_w0)
    if abs(lam) < 1e-14:
        raise DerivativeZero(f"phi'(w0) = {lam:.3g} vanishes")
    if abs(lam) >= 1 - 1e-12:
        raise DerivativeNotContractive(f"|phi'(w0)| = {abs(lam):.15g} is not below 1")

    phi_hat = recentered_symbol(phi, fp, N)
    kappa = scale(phi_hat, 1 / lam)
    G = phi_hat
    lam_k = lam
    steps = 0
    converged = False
    while steps < max_iter:
        steps += 1
        nxt = scale(compose(kappa, G), 1 / lam_k)
        diff = max_deviation(nxt, kappa)
        kappa = nxt
        if diff < CONVERGENCE_TOL * max(1.0, float(np.max(np.abs(kappa.coeffs)))):
            converged = True
            break
        G = compose(G, G)
        lam_k = lam_k * lam_k
        if abs(lam_k) < UNDERFLOW:
            break
    if not converged:
        raise NoConvergence(f"Koenigs iteration did not settle after {steps} doubling steps")

    coeffs = np.array(kappa.coeffs)
    coeffs[0] = 0
    kappa = TruncatedSeries(coeffs / coeffs[1])
    residual = max_deviation(compose(kappa, phi_hat), scale(kappa, lam))
    logger.debug("Koenigs iteration: %d doubling steps, Schroeder residual %.3g", steps, residual)
    return KoenigsResult(kappa, lam, complex(fp.w0), steps, residual)


def phi_from_koenigs(kappa: TruncatedSeries, lambda_: complex) -> TruncatedSeries:
    """
    phi = kappa^{-1}∘(lambda kappa), the self-map whose Koenigs function is ``kappa``.

    Raises:
        NotInvertible: If kappa(0) != 0 or kappa'(0) = 0.
    """
    if not 0 < abs(lambda_) < 1:
        raise InvalidParameter(f"lambda must satisfy 0 < |lambda| < 1, got {lambda_}")
    return compose(revert(kappa), scale(kappa, lambda_))


def power_membership_report(
    kr: KoenigsResult, weights: WeightSequence, n_max: int, threshold: float = DIVERGENCE_SLOPE
) -> List[PowerMembership]:
    """Divergence heuristic for kappa, kappa², ..., kappa^n_max in H²(beta)."""
    if n_max < 1:
        raise InvalidParameter(f"n_max must be at least 1, got {n_max}")
    out = []
    p = constant(1, kr.kappa_series.trunc_degree)
    for n in range(1, n_max + 1):
        p = multiply(p, kr.kappa_series)
        profile = norm_profile(p, weights)
        out.append(PowerMembership(n, tail_slope(profile), divergence_flag(profile, threshold)))
    return out


def obstruction_value(w0: complex, weights: WeightSequence, N: int) -> float:
    """
    |K^(1)_w0(w0)| / (||K_w0|| ||K^(1)_w0||) from truncated kernel sums.

    For a J-symmetric C_phi with J(1) proportional to K_w0 this is |kappa(0)|
    of the unit-norm Koenigs function.

    Raises:
        BasePointOutsideDisk: If |w0| >= 1.
    """
    k0 = kernel(w0, 0, weights, N)
    k1 = kernel(w0, 1, weights, N)
    numerator = abs(evaluate(k1.coeffs, w0))
    return float(numerator / (k0.norm() * k1.norm()))


def kappa_in_z(kr: KoenigsResult, N: int) -> TruncatedSeries:
    """
    kappa∘sigma in the original variable, truncated to degree N.

    This is a polynomial composition with sigma(0) = w0, so the highest
    coefficients carry the truncation error of kappa_series.
    """
    if kr.w0 == 0:
        return truncate(kr.kappa_series, N)
    sigma = to_series(involutive_automorphism(kr.w0), N)
    return compose(truncate(kr.kappa_series, N), sigma)


def consistency_check(
    kr: KoenigsResult, weights: WeightSequence, threshold: float = DIVERGENCE_SLOPE
) -> ConsistencyReport:
    """
    Compare beta(0) |kappa(0)| / ||kappa|| with obstruction_value(w0).

    Raises:
        DivergentKoenigsNorm: If the truncated norm of kappa is still growing.
    """
    if divergence_flag(norm_profile(kr.kappa_series, weights), threshold):
        raise DivergentKoenigsNorm("the Koenigs function has no finite norm at this truncation")
    N = min(kr.kappa_series.trunc_degree, weights.degree)
    k = kappa_in_z(kr, N)
    lhs = float(weights.beta[0] * abs(k.coeffs[0]) / norm(k, weights))
    rhs = obstruction_value(kr.w0, weights, N)
    return ConsistencyReport(lhs, rhs, abs(lhs - rhs))


def eigenvalue_decay_report(M: OperatorMatrix, count: int = 8) -> EigenvalueDecay:
    """Non-rigorous decay table of the leading eigenvalue moduli."""
    moduli = [abs(v) for v in spectrum(M)[:count]]
    ratios = [b / a if a > 0 else 0.0 for a, b in zip(moduli, moduli[1:])]
    return EigenvalueDecay(moduli, ratios)
