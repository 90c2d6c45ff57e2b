"""CLI: weighted composition operator verifier

Usage examples:
  # matrix of the symmetric pair on the Hardy space, as CSV
  wco matrix --kappa 1 --a0 0 --a1 0.5 --b 1 --trunc 8

  # classify a series symbol
  wco check --phi "z^2" --psi "1" --json report.json

  # eigenvalues with the ladder distances
  wco spectrum --a0 0.3 --a1 0.4 --b 1 --trunc 64 --ladder

  # Koenigs function and membership report
  wco koenigs --phi "0.5*z/(1-0.5*z)"

  # full verification suite
  wco verify --seed 7 --filter ppf
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from hardy.wco.models import ExitCode, OutputFormat
from .report import render
from .shared import configure_logging
from .tools import cmd_check, cmd_koenigs, cmd_matrix, cmd_spectrum, cmd_verify

logger = logging.getLogger(__name__)


def _add_symbol_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kappa", type=float, default=1.0, help="Kernel exponent of H²(beta_kappa) (default 1).")
    p.add_argument("--trunc", type=int, default=None, help="Truncation N (default WCO_TRUNC).")
    p.add_argument("--a0", default=None, help="PPF parameter a0, complex literal such as 0.5i or 0.3-0.1i.")
    p.add_argument("--a1", default=None, help="PPF parameter a1.")
    p.add_argument("--b", default=None, help="PPF parameter b (default 1).")
    p.add_argument("--phi", default=None, help="phi as an expression in z, e.g. 'z^2'.")
    p.add_argument("--psi", default=None, help="psi as an expression in z (default 1).")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", default=None, help="Write the JSON report here instead of stdout.")
    p.add_argument("--csv", default=None, help="Write the CSV table here instead of stdout.")
    p.add_argument("--log-level", default=None, help="Logging level (default WCO_LOG_LEVEL).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wco",
        description="Weighted composition operators on weighted Hardy spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="Write the truncated operator matrix as CSV.")
    _add_symbol_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("check", help="Classify the operator (J-symmetric, hermitian, normal).")
    _add_symbol_flags(p)
    p.add_argument("--tol", type=float, default=None, help="Tolerance for exact identities.")
    p.add_argument("--grid", type=int, default=None, help="Points per axis of the normality grid.")
    _add_output_flags(p)

    p = sub.add_parser("spectrum", help="Eigenvalues of the truncated matrix as CSV.")
    _add_symbol_flags(p)
    p.add_argument("--ladder", action="store_true", help="Add distances to psi(w0) phi'(w0)^n.")
    _add_output_flags(p)

    p = sub.add_parser("koenigs", help="Koenigs function, membership and obstruction report.")
    _add_symbol_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("verify", help="Run the verification suite.")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None, help="Seed for random sweeps.")
    p.add_argument("--filter", default=None, help="Only run checks whose id contains this text.")
    p.add_argument("--tol", type=float, default=None, help="Tolerance for exact identities.")
    p.add_argument("--workers", type=int, default=None, help="Worker threads (default WCO_WORKERS).")
    _add_output_flags(p)
    return parser


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _symbol_kwargs(args: argparse.Namespace) -> dict:
    return {
        "trunc": args.trunc,
        "kappa": args.kappa,
        "a0": args.a0,
        "a1": args.a1,
        "b": args.b,
        "phi": args.phi,
        "psi": args.psi,
    }


def run(args: argparse.Namespace) -> int:
    if args.command == "matrix":
        result = cmd_matrix(**_symbol_kwargs(args))
    elif args.command == "check":
        result = cmd_check(**_symbol_kwargs(args), tol=args.tol, grid=args.grid)
    elif args.command == "spectrum":
        result = cmd_spectrum(**_symbol_kwargs(args), ladder=args.ladder)
    elif args.command == "koenigs":
        result = cmd_koenigs(**_symbol_kwargs(args))
    else:
        result = cmd_verify(seed=args.seed, filter=args.filter, tol=args.tol, workers=args.workers)

    if result["status"] == "error":
        sys.stderr.write(f"wco {args.command}: {result['error_message']}\n")
        return result["exit_code"]
    fmt = OutputFormat(result["format"])
    _emit(render(result), getattr(args, fmt.value))
    return result.get("exit_code", int(ExitCode.OK))


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    return run(args)


if __name__ == "__main__":
    raise SystemExit(main())
