"""
Linear-fractional self-maps of the unit disk.

Maps are projective: (a, b, c, d) and any nonzero multiple describe the same
z -> (az + b)/(cz + d). Comparisons go through ``MobiusMap.normalized``,
which divides by the first coefficient of maximal modulus.
"""

import cmath
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Tuple, Union

import numpy as np

from .errors import (
    DegenerateComposition,
    DegenerateMap,
    InvalidParameter,
    NoFixedPointFound,
    NotSelfMap,
    ParameterOutsideDisk,
    PoleInsideDisk,
)
from .series import TruncatedSeries, derivative, powers

logger = logging.getLogger(__name__)

DET_TOL = 1e-14
SELF_MAP_SAMPLES = 4096
SELF_MAP_TOL = 1e-12
MAX_ITERATION_STEPS = 100_000


def _normalize(coeffs: np.ndarray) -> np.ndarray:
    mags = np.abs(coeffs)
    pivot = int(np.argmax(mags >= (1 - 1e-9) * mags.max()))
    return coeffs / coeffs[pivot]


@dataclass(frozen=True)
class MobiusMap:
    """
    The map z -> (a*z + b)/(c*z + d) with ad - bc != 0.
    """
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        n = _normalize(self.coefficients())
        if abs(n[0] * n[3] - n[1] * n[2]) <= DET_TOL:
            raise DegenerateMap(f"determinant vanishes for {self}")

    def coefficients(self) -> np.ndarray:
        return np.array([self.a, self.b, self.c, self.d], dtype=complex)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def pole(self) -> complex:
        """The pole -d/c, or infinity when c = 0."""
        return complex("inf") if self.c == 0 else -self.d / self.c

    def __call__(self, z):
        return (self.a * z + self.b) / (self.c * z + self.d)

    def derivative(self, z):
        return self.det / (self.c * z + self.d) ** 2

    def normalized(self) -> "MobiusMap":
        return MobiusMap(*_normalize(self.coefficients()))

    def deviation(self, other: "MobiusMap") -> float:
        """Largest coefficient difference after normalizing both maps."""
        return float(np.max(np.abs(_normalize(self.coefficients()) - _normalize(other.coefficients()))))

    def to_dict(self) -> Dict[str, complex]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


IDENTITY = MobiusMap(1, 0, 0, 1)


def identity_map() -> MobiusMap:
    return IDENTITY


def linear_map(a: complex) -> MobiusMap:
    """z -> a*z."""
    return MobiusMap(a, 0, 0, 1)


@dataclass(frozen=True)
class PPFParams:
    """
    Parameters of the symmetric pair

        psi(z) = b / (1 - a0*z)^kappa,   phi(z) = a0 + a1*z / (1 - a0*z).
    """
    a0: complex
    a1: complex
    b: complex
    kappa: float = 1.0

    def __post_init__(self):
        for name in ("a0", "a1", "b"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        object.__setattr__(self, "kappa", float(self.kappa))
        if self.kappa < 1:
            raise InvalidParameter(f"kappa must be >= 1, got {self.kappa}")

    def phi(self, z):
        return self.a0 + self.a1 * z / (1 - self.a0 * z)

    def psi(self, z):
        # 1 - a0*z has positive real part on the disk, so the principal power
        # agrees with the binomial series
        return self.b * np.power(1 - self.a0 * z, -self.kappa)

    def phi_derivative(self, z):
        return self.a1 / (1 - self.a0 * z) ** 2

    def psi_derivative(self, z):
        return self.kappa * self.a0 * self.b * np.power(1 - self.a0 * z, -self.kappa - 1)

    def phi_series(self, N: int) -> TruncatedSeries:
        coeffs = np.zeros(N + 1, dtype=complex)
        coeffs[0] = self.a0
        if N >= 1:
            coeffs[1:] = self.a1 * powers(self.a0, N - 1)
        return TruncatedSeries(coeffs)

    def psi_series(self, N: int) -> TruncatedSeries:
        """Generalized binomial expansion of b (1 - a0 z)^(-kappa)."""
        n = np.arange(1, N + 1)
        ratios = (n - 1 + self.kappa) / n * self.a0
        return TruncatedSeries(self.b * np.concatenate([[1 + 0j], np.cumprod(ratios)]))

    def tilde(self) -> "PPFParams":
        """Parameters of the pair (J psi, J phi) with [Jf](z) = conj(f(conj z))."""
        return PPFParams(self.a0.conjugate(), self.a1.conjugate(), self.b.conjugate(), self.kappa)

    def is_real(self, tol: float = 1e-12) -> bool:
        return max(abs(self.a0.imag), abs(self.a1.imag), abs(self.b.imag)) <= tol

    def normality_gap(self) -> float:
        """|Im(a0 conj(a1)) - (1 - |a0|²) Im(a0)|; zero exactly when condition (ii) holds."""
        lhs = (self.a0 * self.a1.conjugate()).imag
        rhs = (1 - abs(self.a0) ** 2) * self.a0.imag
        return abs(lhs - rhs)

    def satisfies_normality_condition(self, tol: float = 1e-12) -> bool:
        return self.b == 0 or self.normality_gap() <= tol

    def to_dict(self) -> Dict[str, Union[complex, float]]:
        return {"a0": self.a0, "a1": self.a1, "b": self.b, "kappa": self.kappa}


@dataclass(frozen=True)
class FixedPointInfo:
    """
    A fixed point w0 of a self-map and the derivative there.

    Attributes:
        w0: The fixed point, |w0| <= 1.
        derivative_at_w0: phi'(w0).
        interior: True when |w0| < 1.
    """
    w0: complex
    derivative_at_w0: complex
    interior: bool


@dataclass(frozen=True)
class SelfMapCheck:
    ok: bool
    max_boundary_modulus: float


def involutive_automorphism(a: complex) -> MobiusMap:
    """
    The involution z -> (a - z)/(1 - conj(a) z).

    Raises:
        ParameterOutsideDisk: If |a| >= 1.
    """
    a = complex(a)
    if abs(a) >= 1:
        raise ParameterOutsideDisk(f"automorphism parameter must lie in the disk, got |a| = {abs(a):.6g}")
    return MobiusMap(-1, a, -a.conjugate(), 1)


def involution_fixed_point(a: complex) -> complex:
    """
    Closed form of the interior fixed point of (a - z)/(1 - conj(a) z).

    (1 - sqrt(1 - |a|²))/conj(a), rewritten as a/(1 + sqrt(1 - |a|²)) to avoid
    cancellation for small |a|.
    """
    a = complex(a)
    return a / (1 + np.sqrt(1 - abs(a) ** 2))


def ppf_map(p: PPFParams, samples: int = SELF_MAP_SAMPLES) -> MobiusMap:
    """
    phi of the symmetric pair as a Mobius map: (a0 + (a1 - a0²) z)/(1 - a0 z).

    Raises:
        NotSelfMap: If phi does not map the disk into itself.
        DegenerateMap: If a1 = 0 (phi constant).
    """
    m = MobiusMap(p.a1 - p.a0 ** 2, p.a0, -p.a0, 1)
    check = self_map_check(m, samples)
    if not check.ok:
        raise NotSelfMap(
            f"phi for a0={p.a0:.6g}, a1={p.a1:.6g} reaches modulus {check.max_boundary_modulus:.6g} on the circle"
        )
    return m


def compose_maps(f: MobiusMap, g: MobiusMap) -> MobiusMap:
    """
    f∘g as the product of coefficient matrices.

    Raises:
        DegenerateComposition: If the normalized determinant collapses.
    """
    coeffs = np.array([
        f.a * g.a + f.b * g.c,
        f.a * g.b + f.b * g.d,
        f.c * g.a + f.d * g.c,
        f.c * g.b + f.d * g.d,
    ])
    n = _normalize(coeffs)
    if abs(n[0] * n[3] - n[1] * n[2]) <= DET_TOL:
        raise DegenerateComposition("composition has a vanishing determinant")
    return MobiusMap(*coeffs)


def _iterate(func: Callable[[complex], complex], start: complex, max_steps: int, tol: float) -> Tuple[complex, bool]:
    z = complex(start)
    for _ in range(max_steps):
        nxt = complex(func(z))
        if not np.isfinite(nxt) or abs(nxt) > 1 + 1e-9:
            return nxt, False
        if abs(nxt - z) < tol:
            return nxt, True
        z = nxt
    return z, False


def fixed_point_in_disk(m: MobiusMap, max_steps: int = MAX_ITERATION_STEPS) -> FixedPointInfo:
    """
    Fixed point of a Mobius self-map, preferring one inside the disk.

    Solves c w² + (d - a) w - b = 0 with the stable root formula and keeps the
    root of smaller modulus. If it is not interior, or the discriminant nearly
    vanishes, the Denjoy-Wolff point is located by iterating from 0.

    Raises:
        NoFixedPointFound: If the iteration does not settle within ``max_steps``.
    """
    a, b, c, d = _normalize(m.coefficients())
    A, B, C = c, d - a, -b
    candidate = None
    near_parabolic = False
    if abs(A) <= DET_TOL:
        if abs(B) > DET_TOL:
            candidate = -C / B
        elif abs(C) <= DET_TOL:
            # identity: every point is fixed
            return FixedPointInfo(0j, 1 + 0j, True)
    else:
        disc = B * B - 4 * A * C
        if abs(disc) < 1e-10:
            near_parabolic = True
            candidate = -B / (2 * A)
        else:
            sq = cmath.sqrt(disc)
            if (B.conjugate() * sq).real < 0:
                sq = -sq
            q = -(B + sq) / 2
            candidate = min((q / A, C / q), key=abs)

    if candidate is not None and not near_parabolic and abs(candidate) < 1 - 1e-12:
        return FixedPointInfo(complex(candidate), complex(m.derivative(candidate)), True)

    logger.warning("no interior fixed point from the quadratic; iterating toward the Denjoy-Wolff point")
    z, converged = _iterate(m, 0j, max_steps, 1e-13)
    if not converged:
        if candidate is not None and abs(abs(candidate) - 1) < 1e-6 and abs(z - candidate) < 1e-3:
            z = candidate
        else:
            raise NoFixedPointFound(f"iteration did not converge in {max_steps} steps")
    return FixedPointInfo(complex(z), complex(m.derivative(z)), abs(z) < 1 - 1e-12)


def series_fixed_point(s: TruncatedSeries, max_steps: int = MAX_ITERATION_STEPS, tol: float = 1e-14) -> FixedPointInfo:
    """
    Attracting fixed point of a series self-map, found by iterating from 0.

    Raises:
        NoFixedPointFound: If the orbit of 0 does not settle.
    """
    coeffs = s.coeffs[::-1]
    z, converged = _iterate(lambda x: np.polyval(coeffs, x), 0j, max_steps, tol)
    if not converged:
        raise NoFixedPointFound(f"orbit of 0 did not converge in {max_steps} steps")
    slope = complex(np.polyval(derivative(s).coeffs[::-1], z))
    return FixedPointInfo(complex(z), slope, abs(z) < 1 - 1e-12)


def self_map_check(
    m: Union[MobiusMap, TruncatedSeries], samples: int = SELF_MAP_SAMPLES, tol: float = SELF_MAP_TOL
) -> SelfMapCheck:
    """
    Numerically verify that ``m`` maps the disk into itself.

    Evaluates |m| at ``samples`` equispaced points of the unit circle; by the
    maximum modulus principle the boundary maximum bounds the disk. A Mobius
    map with its pole in the closed disk fails outright.

    Args:
        m: A Mobius map or a truncated series.
        samples: Number of boundary points, at least 16.
        tol: Allowed excess over modulus 1.
    """
    if samples < 16:
        raise InvalidParameter(f"self-map check needs at least 16 samples, got {samples}")
    circle = np.exp(2j * np.pi * np.arange(samples) / samples)
    if isinstance(m, MobiusMap):
        if m.c != 0 and abs(m.d) <= abs(m.c):
            return SelfMapCheck(False, float("inf"))
        values = m(circle)
    else:
        values = np.polyval(m.coeffs[::-1], circle)
    peak = float(np.max(np.abs(values)))
    return SelfMapCheck(peak <= 1 + tol, peak)


def to_series(m: MobiusMap, N: int) -> TruncatedSeries:
    """
    Taylor coefficients of m through degree N by geometric expansion of 1/(cz + d).

    Raises:
        PoleInsideDisk: If the pole lies in the closed unit disk.
    """
    if m.d == 0 or (m.c != 0 and abs(m.d) <= abs(m.c)):
        raise PoleInsideDisk(f"pole at {m.pole:.6g} lies in the closed disk")
    g = powers(-m.c / m.d, N) / m.d
    coeffs = m.b * g
    coeffs[1:] += m.a * g[:-1]
    return TruncatedSeries(coeffs)


def _disk_samples(samples: int) -> np.ndarray:
    angles = np.exp(2j * np.pi * np.arange(samples) / samples)
    rings = [angles] + [r * angles[:: 4] for r in (0.25, 0.5, 0.75)]
    return np.concatenate(rings + [np.zeros(1)])


def psi_min_modulus(p: PPFParams, samples: int = SELF_MAP_SAMPLES) -> float:
    """Smallest |psi| over boundary and interior sample points."""
    return float(np.min(np.abs(p.psi(_disk_samples(samples)))))


def phi_injective_on_grid(p: PPFParams, points: int = 64, tol: float = 1e-9) -> bool:
    """Whether phi separates the points of a polar grid (8 radii times points/8 angles)."""
    radii = np.linspace(0.1, 0.8, 8)
    angles = np.exp(2j * np.pi * np.arange(max(points // 8, 1)) / max(points // 8, 1))
    grid = (radii[:, None] * angles[None, :]).ravel()
    images = p.phi(grid)
    gaps = np.abs(images[:, None] - images[None, :])
    np.fill_diagonal(gaps, np.inf)
    return bool(gaps.min() > tol)
