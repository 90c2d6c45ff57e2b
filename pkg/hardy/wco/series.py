"""
Truncated Taylor series over the complex numbers.

A ``TruncatedSeries`` of degree N holds the coefficients of z^0 .. z^N of an
analytic function on the unit disk. Binary operations never inflate
precision: the result carries the smaller of the two degrees.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .errors import InnerConstantTooLarge, InvalidParameter, NotInvertible

logger = logging.getLogger(__name__)

DEFAULT_DEGREE = 32

Number = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """
    Degree-N complex Taylor polynomial standing in for an analytic function.

    Attributes:
        coeffs: Read-only complex array; ``coeffs[n]`` is the coefficient of z^n.
    """
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=complex).ravel()
        if arr.size == 0:
            raise InvalidParameter("a truncated series needs at least one coefficient")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def trunc_degree(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n: int) -> complex:
        return complex(self.coeffs[n])

    def __call__(self, z: Number) -> complex:
        return evaluate(self, z)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return subtract(self, other)

    def __mul__(self, other: Union["TruncatedSeries", Number]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "TruncatedSeries":
        return scale(self, -1)

    def __repr__(self) -> str:
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:4])
        more = ", ..." if self.coeffs.size > 4 else ""
        return f"TruncatedSeries(N={self.trunc_degree}, [{head}{more}])"


def from_coeffs(coeffs: Iterable[Number], degree: int = None) -> TruncatedSeries:
    """Build a series from coefficients, padding or cutting to ``degree`` if given."""
    s = TruncatedSeries(np.asarray(list(coeffs), dtype=complex))
    return s if degree is None else truncate(s, degree)


def constant(value: Number, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    coeffs = np.zeros(degree + 1, dtype=complex)
    coeffs[0] = value
    return TruncatedSeries(coeffs)


def identity(degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """The series z."""
    coeffs = np.zeros(degree + 1, dtype=complex)
    if degree >= 1:
        coeffs[1] = 1
    return TruncatedSeries(coeffs)


def powers(x: Number, n: int) -> np.ndarray:
    """The array [1, x, x², ..., x^n]."""
    return np.concatenate([[1 + 0j], np.cumprod(np.full(n, complex(x)))])


def geometric(ratio: Number, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """The series of 1/(1 - ratio*z)."""
    return TruncatedSeries(powers(ratio, degree))


def truncate(s: TruncatedSeries, degree: int) -> TruncatedSeries:
    """Cut ``s`` to ``degree``, padding with zeros when it is shorter."""
    if degree < 0:
        raise InvalidParameter(f"degree must be nonnegative, got {degree}")
    coeffs = np.zeros(degree + 1, dtype=complex)
    n = min(degree, s.trunc_degree) + 1
    coeffs[:n] = s.coeffs[:n]
    return TruncatedSeries(coeffs)


def _common(a: TruncatedSeries, b: TruncatedSeries):
    n = min(a.trunc_degree, b.trunc_degree) + 1
    return a.coeffs[:n], b.coeffs[:n]


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    x, y = _common(a, b)
    return TruncatedSeries(x + y)


def subtract(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    x, y = _common(a, b)
    return TruncatedSeries(x - y)


def scale(s: TruncatedSeries, factor: Number) -> TruncatedSeries:
    return TruncatedSeries(s.coeffs * complex(factor))


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller degree."""
    x, y = _common(a, b)
    return TruncatedSeries(np.convolve(x, y)[: x.size])


def power(s: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0:
        raise InvalidParameter(f"power must be nonnegative, got {n}")
    result = constant(1, s.trunc_degree)
    for _ in range(n):
        result = multiply(result, s)
    return result


def reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    """
    Series of 1/s.

    Raises:
        NotInvertible: If the constant term vanishes.
    """
    c = s.coeffs
    if c[0] == 0:
        raise NotInvertible("reciprocal needs a nonzero constant term")
    out = np.zeros_like(c)
    out[0] = 1 / c[0]
    for n in range(1, c.size):
        out[n] = -np.dot(c[1 : n + 1], out[n - 1 :: -1][:n]) / c[0]
    return TruncatedSeries(out)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """
    Taylor coefficients of outer∘inner through the smaller degree.

    The result is the truncation of the polynomial-in-polynomial composition,
    computed by Horner's scheme over truncated series. It equals the truncation
    of the analytic composition exactly when inner(0) = 0; otherwise callers
    composing a non-polynomial ``outer`` must truncate it where its tail is
    negligible on the range of ``inner``.

    Raises:
        InnerConstantTooLarge: If |inner(0)| >= 1.
    """
    if abs(inner.coeffs[0]) >= 1:
        raise InnerConstantTooLarge(
            f"inner series has constant term of modulus {abs(inner.coeffs[0]):.6g} >= 1"
        )
    degree = min(outer.trunc_degree, inner.trunc_degree)
    g = inner.coeffs[: degree + 1]
    f = outer.coeffs
    result = np.zeros(degree + 1, dtype=complex)
    result[0] = f[degree]
    for k in range(degree - 1, -1, -1):
        result = np.convolve(result, g)[: degree + 1]
        result[0] += f[k]
    return TruncatedSeries(result)


def derivative(s: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative; degree drops by one (a constant stays a degree-0 zero)."""
    if s.trunc_degree == 0:
        return TruncatedSeries(np.zeros(1, dtype=complex))
    n = np.arange(1, s.trunc_degree + 1)
    return TruncatedSeries(s.coeffs[1:] * n)


def evaluate(s: TruncatedSeries, z: Number) -> complex:
    """Horner evaluation of the truncated polynomial."""
    if abs(z) >= 1:
        logger.warning("evaluating a truncated series at |z| = %.6g outside the disk", abs(z))
    return complex(np.polyval(s.coeffs[::-1], z))


def revert(s: TruncatedSeries, atol: float = 1e-14) -> TruncatedSeries:
    """
    Compositional inverse of ``s`` by Newton iteration on series.

    Each step doubles the number of correct coefficients:
    r <- r - (s∘r - z) / (s'∘r).

    Raises:
        NotInvertible: If s(0) != 0 or s'(0) = 0.
    """
    c = s.coeffs
    scale_ = max(1.0, float(np.max(np.abs(c))))
    if abs(c[0]) > atol * scale_:
        raise NotInvertible(f"reversion needs s(0) = 0, got {c[0]:.6g}")
    if s.trunc_degree < 1 or abs(c[1]) <= atol * scale_:
        raise NotInvertible("reversion needs a nonzero linear coefficient")

    degree = s.trunc_degree
    r = from_coeffs([0, 1 / c[1]], degree=1)
    precision = 1
    steps = 0
    while True:
        precision = min(2 * precision, degree)
        s_m = truncate(s, precision)
        ds_m = truncate(derivative(truncate(s, precision + 1)), precision)
        r = truncate(r, precision)
        residual = subtract(compose(s_m, r), identity(precision))
        r = subtract(r, multiply(residual, reciprocal(compose(ds_m, r))))
        steps += 1
        if precision == degree:
            break
    # one polishing step at full precision
    residual = subtract(compose(s, r), identity(degree))
    ds = truncate(derivative(truncate(s, degree + 1)), degree)
    r = subtract(r, multiply(residual, reciprocal(compose(ds, r))))
    logger.debug("series reversion to degree %d took %d Newton steps", degree, steps + 1)
    return TruncatedSeries(np.concatenate([[0], r.coeffs[1:]]))


def max_deviation(a: TruncatedSeries, b: TruncatedSeries) -> float:
    """Largest coefficient difference over the common degree."""
    x, y = _common(a, b)
    return float(np.max(np.abs(x - y)))
