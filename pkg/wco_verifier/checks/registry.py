"""
Registry of verification checks.

A check is a function of a ``CheckContext`` returning ``(params, metric,
tolerance)``; it passes exactly when metric <= tolerance. Falsification
checks report a shortfall ``max(0, threshold - residual)`` against a zero
tolerance so the same rule holds for them. Check ids are stable: renaming
one is a breaking change for anyone diffing reports.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from hardy.wco.errors import WcoError
from hardy.wco.models import Tolerances

logger = logging.getLogger(__name__)

CheckResult = Tuple[Dict[str, Any], float, float]


@dataclass(frozen=True)
class CheckContext:
    seed: int
    samples: int = 4096
    tolerances: Tolerances = Tolerances()
    divergence_slope: float = 1e-3

    def rng(self) -> np.random.Generator:
        """A fresh generator per check, so results do not depend on run order."""
        return np.random.default_rng(self.seed)


@dataclass(frozen=True)
class CheckRecord:
    test_id: str
    params: Dict[str, Any]
    metric: float
    tolerance: float
    passed: bool
    anchor: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "test_id": self.test_id,
            "params": self.params,
            "metric": self.metric,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "anchor": self.anchor,
        }


@dataclass(frozen=True)
class Check:
    test_id: str
    anchor: str
    func: Callable[[CheckContext], CheckResult]

    def run(self, ctx: CheckContext) -> CheckRecord:
        try:
            params, metric, tolerance = self.func(ctx)
        except WcoError as e:
            logger.warning("check %s raised %s: %s", self.test_id, type(e).__name__, e)
            return CheckRecord(self.test_id, {"error": f"{type(e).__name__}: {e}"}, float("inf"), 0.0, False, self.anchor)
        metric = float(metric)
        return CheckRecord(self.test_id, params, metric, float(tolerance), metric <= tolerance, self.anchor)


REGISTRY: Dict[str, Check] = {}


def register(test_id: str, anchor: str):
    """Decorator adding a check function under a stable id."""
    def decorator(func: Callable[[CheckContext], CheckResult]):
        if test_id in REGISTRY:
            raise ValueError(f"duplicate check id {test_id!r}")
        REGISTRY[test_id] = Check(test_id, anchor, func)
        return func
    return decorator


def select(pattern: str = None) -> List[Check]:
    """Registered checks whose id contains ``pattern``, sorted by id."""
    return [REGISTRY[k] for k in sorted(REGISTRY) if not pattern or pattern in k]
