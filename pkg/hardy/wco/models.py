from dataclasses import dataclass
from enum import Enum, IntEnum


class WeightFamily(str, Enum):
    HARDY = "hardy"
    BERGMAN = "bergman"
    BETA_KAPPA = "beta_kappa"
    DIRICHLET = "dirichlet"
    CUSTOM = "custom"


class NormalityMethod(str, Enum):
    KERNEL_GRID = "kernel_grid"
    COMMUTATOR_BLOCK = "commutator_block"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


class ExitCode(IntEnum):
    OK = 0
    NUMERICAL = 1
    USAGE = 2
    VERIFY_FAILED = 3


@dataclass(frozen=True)
class Tolerances:
    """
    Tolerances used by the classifiers.

    Attributes:
        exact: Bound for identities that carry no truncation error.
        truncation: Bound for identities limited by the truncation tail.
    """
    exact: float = 1e-12
    truncation: float = 1e-6
