import logging
import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

from hardy.wco.models import Tolerances

# Load environment variables
load_dotenv()


def _int(name: str, default: int) -> int:
    # base 0 so that WCO_SEED=0xC0FFEE works
    return int(os.getenv(name, str(default)), 0)


def _float(name: str, default: float) -> float:
    return float(os.getenv(name, str(default)))


@dataclass(frozen=True)
class Settings:
    """
    Defaults for every command, read from the environment (and ``.env``).

    Attributes:
        trunc: Default truncation N (WCO_TRUNC).
        tol_exact: Tolerance for truncation-free identities (WCO_TOL_EXACT).
        tol_trunc: Tolerance for truncation-limited identities (WCO_TOL_TRUNC).
        seed: Seed for random sweeps (WCO_SEED).
        samples: Boundary samples for self-map checks (WCO_SAMPLES).
        divergence_slope: Norm-profile divergence threshold (WCO_DIVERGENCE_SLOPE).
        workers: Threads used by ``verify`` (WCO_WORKERS).
        log_level: Logging level name (WCO_LOG_LEVEL).
    """
    trunc: int = 32
    tol_exact: float = 1e-12
    tol_trunc: float = 1e-6
    seed: int = 0xC0FFEE
    samples: int = 4096
    divergence_slope: float = 1e-3
    workers: int = 4
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            trunc=_int("WCO_TRUNC", cls.trunc),
            tol_exact=_float("WCO_TOL_EXACT", cls.tol_exact),
            tol_trunc=_float("WCO_TOL_TRUNC", cls.tol_trunc),
            seed=_int("WCO_SEED", cls.seed),
            samples=_int("WCO_SAMPLES", cls.samples),
            divergence_slope=_float("WCO_DIVERGENCE_SLOPE", cls.divergence_slope),
            workers=_int("WCO_WORKERS", cls.workers),
            log_level=os.getenv("WCO_LOG_LEVEL", cls.log_level).upper(),
        )

    @property
    def tolerances(self) -> Tolerances:
        return Tolerances(exact=self.tol_exact, truncation=self.tol_trunc)


settings = Settings.from_env()


def configure_logging(level: str = None) -> None:
    """Send log records to stderr so stdout carries only reports."""
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
