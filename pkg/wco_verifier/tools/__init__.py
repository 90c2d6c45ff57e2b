from .build_matrix import cmd_matrix
from .check_symbols import cmd_check
from .get_spectrum import cmd_spectrum
from .koenigs_report import cmd_koenigs
from .run_verify import cmd_verify

__all__ = ["cmd_matrix", "cmd_check", "cmd_spectrum", "cmd_koenigs", "cmd_verify"]
