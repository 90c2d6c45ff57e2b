from typing import Optional

from hardy.wco.errors import DivergentKoenigsNorm, InvalidParameter, NumericalFailure
from hardy.wco.koenigs import (
    consistency_check,
    eigenvalue_decay_report,
    koenigs_iterate,
    obstruction_value,
    power_membership_report,
)
from hardy.wco.models import OutputFormat
from ..shared import settings
from .build_matrix import error_result, operator_matrix
from .get_spectrum import fixed_point
from .symbols import resolve_symbols

POWER_MAX = 4


def cmd_koenigs(
    trunc: Optional[int] = None,
    kappa: float = 1.0,
    a0: str = None,
    a1: str = None,
    b: str = None,
    phi: str = None,
    psi: str = None,
    n_max: int = POWER_MAX,
) -> dict:
    """Computes the Koenigs eigenfunction of phi and its membership diagnostics.

    The report holds the normalized Koenigs function (kappa'(w0) = 1 in the
    recentred variable), the divergence heuristic for its powers, the kernel
    obstruction at w0 and, when the norm is finite, the |kappa(0)| comparison.

    Args:
        trunc: Series degree N (default WCO_TRUNC).
        kappa: Kernel exponent of the space.
        a0, a1, b: PPF parameters as complex literals.
        phi, psi: Series expressions in z.
        n_max: Largest power of the Koenigs function to diagnose.

    Returns:
        On success: {'status': 'success', 'format': OutputFormat.JSON, 'report': {'koenigs': ..., 'membership': [...], 'obstruction': ...}}
        On error: {'status': 'error', 'error_message': "|phi'(w0)| = 1 is not below 1", 'exit_code': 1}
    """
    N = trunc if trunc is not None else settings.trunc
    try:
        symbols = resolve_symbols(N, kappa, a0, a1, b, phi, psi, settings.samples)
        fp = fixed_point(symbols)
        kr = koenigs_iterate(symbols.mobius or symbols.phi, fp, N)
        membership = power_membership_report(kr, symbols.weights, n_max, settings.divergence_slope)
        obstruction = obstruction_value(kr.w0, symbols.weights, N)
        try:
            c = consistency_check(kr, symbols.weights, settings.divergence_slope)
            consistency = {"lhs": c.lhs, "rhs": c.rhs, "residual": c.residual}
        except DivergentKoenigsNorm as e:
            consistency = {"skipped": str(e)}
        decay = eigenvalue_decay_report(operator_matrix(symbols, N))
    except (InvalidParameter, NumericalFailure) as e:
        return error_result(e)

    payload = {
        "command": "koenigs",
        "trunc": N,
        "symbols": symbols.describe(),
        "koenigs": kr.to_dict(),
        "membership": [
            {"power": m.power, "tail_slope": m.tail_slope, "divergent": m.divergent} for m in membership
        ],
        "obstruction": obstruction,
        "consistency": consistency,
        "eigenvalue_decay": {
            "moduli": decay.moduli,
            "ratios": decay.ratios,
            "note": "heuristic from a truncated matrix, not a bound on the essential spectral radius",
        },
    }
    return {"status": "success", "format": OutputFormat.JSON, "report": payload}
