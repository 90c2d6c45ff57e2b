from typing import Optional

from hardy.wco.errors import InvalidParameter, NumericalFailure
from hardy.wco.maps import phi_injective_on_grid, psi_min_modulus
from hardy.wco.models import OutputFormat, Tolerances
from hardy.wco.operator import classify, spiral_grid
from ..shared import settings
from .build_matrix import error_result
from .symbols import resolve_symbols


def cmd_check(
    trunc: Optional[int] = None,
    kappa: float = 1.0,
    a0: str = None,
    a1: str = None,
    b: str = None,
    phi: str = None,
    psi: str = None,
    tol: Optional[float] = None,
    grid: Optional[int] = None,
) -> dict:
    """Classifies W_{phi,psi} as complex symmetric (standard J), hermitian and normal.

    Verdicts are data: a successful classification is a success whatever
    the verdicts say.

    Args:
        trunc: Matrix size N (default WCO_TRUNC).
        kappa: Kernel exponent of the space.
        a0, a1, b: PPF parameters as complex literals.
        phi, psi: Series expressions in z.
        tol: Tolerance for the exact identities (default WCO_TOL_EXACT).
        grid: Points per axis of the normality grid; None uses the fixed 25-pair grid.

    Returns:
        On success: {'status': 'success', 'format': OutputFormat.JSON, 'report': {'symbols': ..., 'classification': ..., 'analytic': ...}}
        On error: {'status': 'error', 'error_message': '...', 'exit_code': 2}
    """
    N = trunc if trunc is not None else settings.trunc
    tolerances = Tolerances(
        exact=tol if tol is not None else settings.tol_exact,
        truncation=settings.tol_trunc,
    )
    try:
        symbols = resolve_symbols(N, kappa, a0, a1, b, phi, psi, settings.samples)
        pairs = spiral_grid(grid) if grid is not None else None
        report = classify(symbols.phi, symbols.psi, symbols.weights, N, kappa, tolerances, pairs)
    except (InvalidParameter, NumericalFailure) as e:
        return error_result(e)

    payload = {
        "command": "check",
        "trunc": N,
        "symbols": symbols.describe(),
        "classification": report.to_dict(),
    }
    if symbols.ppf is not None:
        p = symbols.ppf
        # closed-form predictions the numerical verdicts should agree with
        payload["analytic"] = {
            "parameters_real": p.is_real(),
            "normality_condition": p.satisfies_normality_condition(),
            "normality_gap": p.normality_gap(),
            "psi_min_modulus": psi_min_modulus(p, settings.samples),
            "phi_injective_on_grid": phi_injective_on_grid(p),
        }
    return {"status": "success", "format": OutputFormat.JSON, "report": payload}
