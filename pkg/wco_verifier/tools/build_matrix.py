from typing import Optional

from hardy.wco.errors import InvalidParameter, NumericalFailure
from hardy.wco.models import ExitCode, OutputFormat
from hardy.wco.operator import OperatorMatrix, build_matrix
from ..shared import settings
from .symbols import Symbols, resolve_symbols

# Cache of built matrices
# Structure: {(phi bytes, psi bytes, weights label, N): OperatorMatrix}
_matrix_cache = {}
CACHE_SIZE = 64


def operator_matrix(symbols: Symbols, N: int, skip_cache: bool = False) -> OperatorMatrix:
    """Build (or reuse) the N x N matrix of the resolved symbols."""
    key = (symbols.phi.coeffs.tobytes(), symbols.psi.coeffs.tobytes(), symbols.weights.label, N)
    if not skip_cache and key in _matrix_cache:
        return _matrix_cache[key]
    M = build_matrix(symbols.phi, symbols.psi, symbols.weights, N)
    if len(_matrix_cache) >= CACHE_SIZE:
        _matrix_cache.pop(next(iter(_matrix_cache)))
    _matrix_cache[key] = M
    return M


def error_result(exc: Exception) -> dict:
    """Status dict for a library error; usage errors exit 2, numerical failures 1."""
    code = ExitCode.USAGE if isinstance(exc, InvalidParameter) else ExitCode.NUMERICAL
    return {"status": "error", "error_message": str(exc), "exit_code": int(code)}


def cmd_matrix(
    trunc: Optional[int] = None,
    kappa: float = 1.0,
    a0: str = None,
    a1: str = None,
    b: str = None,
    phi: str = None,
    psi: str = None,
) -> dict:
    """Writes the truncated matrix of W_{phi,psi} on H²(beta_kappa) as CSV rows.

    Args:
        trunc: Matrix size N. If None, uses the WCO_TRUNC default (noted in the header).
        kappa: Kernel exponent of the space.
        a0, a1, b: PPF parameters as complex literals ("0.3", "0.5i", "1+2i").
        phi, psi: Series expressions in z; take precedence over the PPF parameters.

    Returns:
        On success: {'status': 'success', 'format': OutputFormat.CSV, 'comments': [...], 'columns': ['row', 'col', 're', 'im'], 'rows': [...]}
        On error: {'status': 'error', 'error_message': 'not a self-map ...', 'exit_code': 2}
    """
    comments = []
    if trunc is None:
        trunc = settings.trunc
        comments.append(f"trunc not given, default N={trunc} used")
    try:
        symbols = resolve_symbols(trunc, kappa, a0, a1, b, phi, psi, settings.samples)
        M = operator_matrix(symbols, trunc)
    except (InvalidParameter, NumericalFailure) as e:
        return error_result(e)

    comments.append(f"weighted composition operator matrix, N={trunc}, weights={M.weights.label}")
    comments.append("basis e_n = z^n/beta(n); entry (row, col) = <W e_col, e_row>")
    rows = [
        (m, n, M.entries[m, n].real, M.entries[m, n].imag)
        for m in range(trunc)
        for n in range(trunc)
    ]
    return {
        "status": "success",
        "format": OutputFormat.CSV,
        "comments": comments,
        "columns": ["row", "col", "re", "im"],
        "rows": rows,
    }
