from typing import Optional

from hardy.wco.errors import InvalidParameter, NumericalFailure
from hardy.wco.maps import fixed_point_in_disk, series_fixed_point
from hardy.wco.models import OutputFormat
from hardy.wco.operator import eigen_ladder_check, spectrum
from hardy.wco.series import evaluate
from ..shared import settings
from .build_matrix import error_result, operator_matrix
from .symbols import Symbols, resolve_symbols

LADDER_MAX = 4


def fixed_point(symbols: Symbols):
    """Interior fixed point of phi: exact for Mobius symbols, by iteration for series."""
    if symbols.mobius is not None:
        return fixed_point_in_disk(symbols.mobius)
    return series_fixed_point(symbols.phi)


def psi_at(symbols: Symbols, w: complex) -> complex:
    if symbols.ppf is not None:
        return complex(symbols.ppf.psi(w))
    return evaluate(symbols.psi, w)


def cmd_spectrum(
    trunc: Optional[int] = None,
    kappa: float = 1.0,
    a0: str = None,
    a1: str = None,
    b: str = None,
    phi: str = None,
    psi: str = None,
    ladder: bool = False,
    ladder_max: int = LADDER_MAX,
) -> dict:
    """Computes the eigenvalues of the truncated matrix, largest modulus first.

    Args:
        trunc: Matrix size N (default WCO_TRUNC).
        kappa: Kernel exponent of the space.
        a0, a1, b: PPF parameters as complex literals.
        phi, psi: Series expressions in z.
        ladder: Add the distance from psi(w0) phi'(w0)^n to the nearest eigenvalue
            for n = 0..ladder_max, in the row with index n.
        ladder_max: Largest ladder power.

    Returns:
        On success: {'status': 'success', 'format': OutputFormat.CSV, 'comments': [...], 'columns': ['index', 're', 'im', 'modulus'], 'rows': [...]}
        On error: {'status': 'error', 'error_message': 'eigensolver failed ...', 'exit_code': 1}
    """
    N = trunc if trunc is not None else settings.trunc
    try:
        symbols = resolve_symbols(N, kappa, a0, a1, b, phi, psi, settings.samples)
        M = operator_matrix(symbols, N)
        values = spectrum(M)
        distances = []
        if ladder:
            fp = fixed_point(symbols)
            distances = eigen_ladder_check(M, fp, psi_at(symbols, fp.w0), ladder_max, values)
    except (InvalidParameter, NumericalFailure) as e:
        return error_result(e)

    comments = [
        f"eigenvalues of the N={N} truncation, weights={M.weights.label}",
        "truncated spectra approximate the operator spectrum only; boundary and essential parts are not resolved",
    ]
    columns = ["index", "re", "im", "modulus"]
    rows = [[k, v.real, v.imag, abs(v)] for k, v in enumerate(values)]
    if ladder:
        comments.append(f"ladder: w0={fp.w0}, phi'(w0)={fp.derivative_at_w0}")
        columns.append("ladder_distance")
        for k, row in enumerate(rows):
            row.append(distances[k] if k < len(distances) else "")
    return {"status": "success", "format": OutputFormat.CSV, "comments": comments, "columns": columns, "rows": rows}
