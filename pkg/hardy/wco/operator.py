"""
Truncated matrices of weighted composition operators W f = psi * (f∘phi).

Matrices are taken in the orthonormal basis e_n = z^n / beta(n), so column n
holds the coordinates of W e_n = psi * phi^n / beta(n):

    M[m][n] = (coefficient of z^m in psi * phi^n) * beta(m) / beta(n).

Every stored entry depends only on coefficients of degree < N, so the
truncated matrix is the exact leading block of the infinite one.

The standard conjugation [Jf](z) = conj(f(conj z)) fixes each e_n (beta is
real), so in coordinates J is entrywise conjugation. Then

    <J W* J e_n, e_m> = conj(<W* e_n, e_m>) = <W e_m, e_n> = M[n][m],

which means W = J W* J exactly when M = M^T. Both this test and the
hermitian test M = M^H are entrywise and carry no truncation error.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from .errors import (
    BasePointOutsideDisk,
    BoundaryFixedPoint,
    ConvergenceFailure,
    DegenerateMap,
    GridDegenerate,
    InnerConstantTooLarge,
    InvalidParameter,
    NotSelfMap,
)
from .maps import FixedPointInfo, PPFParams, ppf_map
from .models import NormalityMethod, Tolerances
from .series import TruncatedSeries, derivative, evaluate, max_deviation, multiply, truncate
from .space import WeightSequence, beta_kappa, kernel

logger = logging.getLogger(__name__)

MAX_SPECTRUM_SIZE = 512
PPF_TOL = 1e-10
DEFAULT_SEED = 0xC0FFEE
SAMPLE_KAPPAS = (1.0, 1.5, 2.0, 3.0)

_GRID_POINTS = (0j, 0.45 + 0j, 0.3j, -0.35 + 0.2j, 0.25 - 0.4j)
GOLDEN = (np.sqrt(5) - 1) / 2


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """
    Leading N x N block of W_{phi,psi} on H²(beta).

    Attributes:
        entries: Read-only complex matrix.
        weights: The space's weights.
        phi: Composition symbol.
        psi: Multiplier symbol.
    """
    entries: np.ndarray
    weights: WeightSequence
    phi: TruncatedSeries
    psi: TruncatedSeries

    def __post_init__(self):
        arr = np.array(self.entries, dtype=complex)
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def block(self, n: int) -> np.ndarray:
        return self.entries[:n, :n]


def build_matrix(phi: TruncatedSeries, psi: TruncatedSeries, weights: WeightSequence, N: int) -> OperatorMatrix:
    """
    Build the N x N matrix of W_{phi,psi}.

    phi^n is accumulated one multiplication at a time, so every entry is the
    exact coefficient of a finite product of polynomials.

    Raises:
        InnerConstantTooLarge: If |phi(0)| >= 1.
    """
    if N < 1:
        raise InvalidParameter(f"matrix size must be positive, got {N}")
    if abs(phi.coeffs[0]) >= 1:
        raise InnerConstantTooLarge(f"|phi(0)| = {abs(phi.coeffs[0]):.6g} is not inside the disk")
    weights.require(N - 1)
    phi_t = truncate(phi, N - 1)
    column = truncate(psi, N - 1)
    beta = weights.beta[:N]
    entries = np.empty((N, N), dtype=complex)
    for n in range(N):
        entries[:, n] = column.coeffs * beta / beta[n]
        column = multiply(column, phi_t)
    return OperatorMatrix(entries, weights, phi, psi)


def build_ppf_matrix(p: PPFParams, N: int, weights: WeightSequence = None) -> OperatorMatrix:
    """Matrix of the symmetric pair on H²(beta_kappa) (or on ``weights`` if given)."""
    ppf_map(p)
    if weights is None:
        weights = beta_kappa(p.kappa, N)
    return build_matrix(p.phi_series(N), p.psi_series(N), weights, N)


def conjugate_coefficients(v: Sequence[complex]) -> np.ndarray:
    """The standard conjugation J acting on basis coordinates."""
    return np.conj(np.asarray(v, dtype=complex))


def transpose_symmetry_residual(M: OperatorMatrix) -> float:
    """max |M[m][n] - M[n][m]|; zero exactly when W = J W* J for the standard J."""
    e = M.entries
    return float(np.max(np.abs(e - e.T)))


def hermitian_residual(M: OperatorMatrix) -> float:
    """max |M[m][n] - conj(M[n][m])|."""
    e = M.entries
    return float(np.max(np.abs(e - e.conj().T)))


def commutator_block_residual(M: OperatorMatrix) -> float:
    """
    max entry of W W* - W* W on the leading floor(N/2) block.

    A secondary normality diagnostic; unlike the kernel identity it carries
    truncation error.
    """
    e = M.entries
    k = max(M.size // 2, 1)
    c = e @ e.conj().T - e.conj().T @ e
    return float(np.max(np.abs(c[:k, :k])))


def default_grid() -> List[Tuple[complex, complex]]:
    """Deterministic 25-pair grid of points (w, z) in the disk."""
    return [(w, z) for w in _GRID_POINTS for z in _GRID_POINTS]


def spiral_grid(count: int, radius: float = 0.6) -> List[Tuple[complex, complex]]:
    """count² pairs drawn from a golden-angle spiral of the given radius."""
    j = np.arange(count)
    points = radius * np.sqrt((j + 0.5) / count) * np.exp(2j * np.pi * GOLDEN * j)
    return [(complex(w), complex(z)) for w in points for z in points]


def normality_residual_grid(p: PPFParams, grid: Optional[Sequence[Tuple[complex, complex]]] = None) -> float:
    """
    Evaluate the two-variable normality identity for the symmetric pair.

    W is normal iff, for all z, w in the disk,

        psi(w) psi~(z) (1 - phi(w) phi~(z))^(-kappa)
            = psi~(w) psi(z) (1 - phi~(w) phi(z))^(-kappa),

    where f~ = J f. Returns the largest deviation over ``grid``; the values are
    closed-form, so there is no truncation error.

    Raises:
        GridDegenerate: If the grid has fewer than 9 points or leaves the
            region where the identity is defined.
    """
    if grid is None:
        grid = default_grid()
    if len(grid) < 9:
        raise GridDegenerate(f"normality grid needs at least 9 points, got {len(grid)}")
    pt = p.tilde()
    worst = 0.0
    for w, z in grid:
        if abs(w) >= 1 or abs(z) >= 1:
            raise GridDegenerate(f"grid point ({w}, {z}) lies outside the disk")
        cross_l = p.phi(w) * pt.phi(z)
        cross_r = pt.phi(w) * p.phi(z)
        if abs(cross_l) >= 1 or abs(cross_r) >= 1:
            raise GridDegenerate(f"|phi(w) phi~(z)| >= 1 at ({w}, {z})")
        lhs = p.psi(w) * pt.psi(z) * np.power(1 - cross_l, -p.kappa)
        rhs = pt.psi(w) * p.psi(z) * np.power(1 - cross_r, -p.kappa)
        worst = max(worst, abs(lhs - rhs))
    return float(worst)


@dataclass(frozen=True)
class PPFFit:
    """
    Best symmetric-pair fit of (phi, psi).

    Attributes:
        params: (a0, a1, b) read off as phi(0), phi'(0), psi(0).
        residual: Largest coefficient deviation from the reconstructed pair.
        is_ppf: residual within tolerance.
    """
    params: PPFParams
    residual: float
    is_ppf: bool


def ppf_classify(phi: TruncatedSeries, psi: TruncatedSeries, kappa: float, tol: float = PPF_TOL) -> PPFFit:
    """
    Test whether (phi, psi) is the symmetric pair b/(1 - a0 z)^kappa, a0 + a1 z/(1 - a0 z).
    """
    N = min(phi.trunc_degree, psi.trunc_degree)
    a1 = phi.coeffs[1] if phi.trunc_degree >= 1 else 0
    p = PPFParams(phi.coeffs[0], a1, psi.coeffs[0], kappa)
    residual = max(max_deviation(phi, p.phi_series(N)), max_deviation(psi, p.psi_series(N)))
    return PPFFit(p, residual, residual <= tol)


@dataclass(frozen=True)
class AdjointKernelCheck:
    """
    Attributes:
        residual: || M* k_w - rhs || in basis coordinates.
        tail_bound: Heuristic size of the kernel coordinates dropped by truncation.
    """
    residual: float
    tail_bound: float


def adjoint_kernel_check(M: OperatorMatrix, w: complex, order: int) -> AdjointKernelCheck:
    """
    Compare M* applied to a kernel with the closed-form image.

        W* K_w     = conj(psi(w)) K_{phi(w)}
        W* K_w^(1) = conj(psi(w)) conj(phi'(w)) K_{phi(w)}^(1) + conj(psi'(w)) K_{phi(w)}

    Raises:
        BasePointOutsideDisk: If |w| > 0.9.
    """
    if abs(w) > 0.9:
        raise BasePointOutsideDisk(f"adjoint kernel check needs |w| <= 0.9, got {abs(w):.6g}")
    if order not in (0, 1):
        raise InvalidParameter(f"adjoint kernel check supports order 0 or 1, got {order}")
    deg = M.size - 1
    x = kernel(w, order, M.weights, deg).coordinates()
    lhs = M.entries.conj().T @ x

    psi_w = evaluate(M.psi, w)
    phi_w = evaluate(M.phi, w)
    k0 = kernel(phi_w, 0, M.weights, deg).coordinates()
    if order == 0:
        rhs = np.conj(psi_w) * k0
    else:
        dphi = evaluate(derivative(M.phi), w)
        dpsi = evaluate(derivative(M.psi), w)
        k1 = kernel(phi_w, 1, M.weights, deg).coordinates()
        rhs = np.conj(psi_w) * np.conj(dphi) * k1 + np.conj(dpsi) * k0

    column_norm = float(np.max(np.sum(np.abs(M.entries), axis=0)))
    tail_bound = float(np.abs(x[-1]) * abs(w) / (1 - abs(w)) * column_norm)
    return AdjointKernelCheck(float(np.linalg.norm(lhs - rhs)), tail_bound)


def _sort_eigenvalues(values: np.ndarray) -> List[complex]:
    moduli = np.round(np.abs(values), 12)
    angles = np.angle(values)
    angles = np.where(angles >= np.pi, angles - 2 * np.pi, angles)
    order = np.lexsort((angles, -moduli))
    return [complex(v) for v in values[order]]


def spectrum(M: OperatorMatrix) -> List[complex]:
    """
    Eigenvalues of the truncated matrix, by decreasing modulus then argument in [-pi, pi).

    Raises:
        ConvergenceFailure: If the dense eigensolver does not converge.
    """
    if M.size > MAX_SPECTRUM_SIZE:
        raise InvalidParameter(f"spectrum supports N <= {MAX_SPECTRUM_SIZE}, got {M.size}")
    try:
        values = scipy.linalg.eigvals(M.entries, check_finite=True)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise ConvergenceFailure(f"eigensolver failed: {exc}") from exc
    return _sort_eigenvalues(values)


def eigen_ladder_check(
    M: OperatorMatrix,
    fp: FixedPointInfo,
    psi_at_w0: complex,
    n_max: int,
    eigenvalues: Optional[Sequence[complex]] = None,
) -> List[float]:
    """
    Distances from psi(w0) phi'(w0)^n, n = 0..n_max, to the nearest computed eigenvalue.

    Raises:
        BoundaryFixedPoint: If the fixed point is not interior.
    """
    if not fp.interior:
        raise BoundaryFixedPoint(f"eigen ladder needs an interior fixed point, got w0 = {fp.w0:.6g}")
    values = np.asarray(spectrum(M) if eigenvalues is None else eigenvalues, dtype=complex)
    targets = psi_at_w0 * fp.derivative_at_w0 ** np.arange(n_max + 1)
    return [float(np.min(np.abs(values - t))) for t in targets]


@dataclass(frozen=True)
class SymmetryReport:
    """
    Classification of W_{phi,psi} with the residuals behind each verdict.
    """
    size: int
    weights: str
    transpose_sym_residual: float
    hermitian_residual: float
    normality_residual: float
    commutator_block_residual: float
    normality_method: NormalityMethod
    ppf: Optional[PPFParams]
    ppf_residual: float
    tolerances: Tolerances
    complex_symmetric_standard_J: bool
    hermitian: bool
    normal: bool

    @property
    def verdicts(self) -> Dict[str, bool]:
        return {
            "complex_symmetric_standard_J": self.complex_symmetric_standard_J,
            "hermitian": self.hermitian,
            "normal": self.normal,
        }

    def to_dict(self) -> Dict:
        out = asdict(self)
        out["normality_method"] = self.normality_method.value
        out["ppf"] = None if self.ppf is None else self.ppf.to_dict()
        out["verdicts"] = self.verdicts
        for key in self.verdicts:
            out.pop(key)
        return out


def classify(
    phi: TruncatedSeries,
    psi: TruncatedSeries,
    weights: WeightSequence,
    N: int,
    kappa: float = None,
    tolerances: Tolerances = Tolerances(),
    grid: Optional[Sequence[Tuple[complex, complex]]] = None,
) -> SymmetryReport:
    """
    Classify W_{phi,psi} as complex symmetric (standard J), hermitian and normal.

    Normality of a symmetric pair on its own H²(beta_kappa) is decided by the
    exact kernel identity; any other symbol falls back to the commutator block,
    judged with the truncation tolerance.
    """
    M = build_matrix(phi, psi, weights, N)
    scale = max(1.0, float(np.max(np.abs(M.entries))))
    t = transpose_symmetry_residual(M)
    h = hermitian_residual(M)
    comm = commutator_block_residual(M)
    if kappa is None:
        kappa = weights.kappa or 1.0
    fit = ppf_classify(phi, psi, kappa)
    use_grid = fit.is_ppf and weights.kappa is not None and weights.kappa == fit.params.kappa

    if use_grid:
        normality = normality_residual_grid(fit.params, grid)
        normal = normality <= tolerances.exact * max(1.0, abs(fit.params.b) ** 2)
        method = NormalityMethod.KERNEL_GRID
    else:
        normality = comm
        normal = comm <= tolerances.truncation * scale ** 2
        method = NormalityMethod.COMMUTATOR_BLOCK
    logger.debug("classified N=%d: transpose %.3g, hermitian %.3g, normality %.3g (%s)", N, t, h, normality, method.value)

    return SymmetryReport(
        size=N,
        weights=weights.label,
        transpose_sym_residual=t,
        hermitian_residual=h,
        normality_residual=normality,
        commutator_block_residual=comm,
        normality_method=method,
        ppf=fit.params if fit.is_ppf else None,
        ppf_residual=fit.residual,
        tolerances=tolerances,
        complex_symmetric_standard_J=t <= tolerances.exact * scale,
        hermitian=h <= tolerances.exact * scale,
        normal=normal,
    )


def _disk_point(rng: np.random.Generator, radius: float) -> complex:
    r = radius * np.sqrt(rng.random())
    return complex(r * np.exp(2j * np.pi * rng.random()))


def sample_ppf_params(
    rng: np.random.Generator,
    count: int,
    kappas: Sequence[float] = SAMPLE_KAPPAS,
    max_a0: float = 0.5,
    max_a1: float = 0.4,
    max_b: float = 2.0,
) -> List[PPFParams]:
    """Rejection-sample symmetric pairs whose phi passes the self-map check."""
    out = []
    while len(out) < count:
        p = PPFParams(
            _disk_point(rng, max_a0),
            _disk_point(rng, max_a1),
            _disk_point(rng, max_b),
            float(kappas[rng.integers(len(kappas))]),
        )
        try:
            ppf_map(p)
        except (NotSelfMap, DegenerateMap):
            continue
        out.append(p)
    return out
