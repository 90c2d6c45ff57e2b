import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from hardy.wco.models import ExitCode, OutputFormat, Tolerances
from ..checks import CheckContext, select
from ..shared import settings

logger = logging.getLogger(__name__)


def cmd_verify(
    seed: Optional[int] = None,
    filter: Optional[str] = None,
    tol: Optional[float] = None,
    workers: Optional[int] = None,
) -> dict:
    """Runs the registered verification checks.

    Checks run in a thread pool; records are sorted by test_id before they
    are returned, so the output does not depend on scheduling.

    Args:
        seed: Seed for the random sweeps (default WCO_SEED).
        filter: Keep only checks whose id contains this substring.
        tol: Tolerance for truncation-free identities (default WCO_TOL_EXACT).
        workers: Thread count (default WCO_WORKERS).

    Returns:
        On success: {'status': 'success', 'format': OutputFormat.JSON, 'report': {'records': [...], 'passed': 34, 'failed': 0}, 'exit_code': 0}
        With failures: same shape with 'exit_code': 3.
        On error: {'status': 'error', 'error_message': 'no checks match ...', 'exit_code': 2}
    """
    checks = select(filter)
    if not checks:
        return {"status": "error", "error_message": f"no checks match {filter!r}", "exit_code": int(ExitCode.USAGE)}
    ctx = CheckContext(
        seed=settings.seed if seed is None else seed,
        samples=settings.samples,
        tolerances=Tolerances(
            exact=settings.tol_exact if tol is None else tol,
            truncation=settings.tol_trunc,
        ),
        divergence_slope=settings.divergence_slope,
    )
    with ThreadPoolExecutor(max_workers=max(1, workers or settings.workers)) as pool:
        records = list(pool.map(lambda c: c.run(ctx), checks))
    records.sort(key=lambda r: r.test_id)

    failed = [r.test_id for r in records if not r.passed]
    for test_id in failed:
        logger.warning("check failed: %s", test_id)
    report = {
        "command": "verify",
        "seed": ctx.seed,
        "records": [r.to_dict() for r in records],
        "passed": len(records) - len(failed),
        "failed": len(failed),
        "failures": failed,
    }
    code = ExitCode.VERIFY_FAILED if failed else ExitCode.OK
    return {"status": "success", "format": OutputFormat.JSON, "report": report, "exit_code": int(code)}
