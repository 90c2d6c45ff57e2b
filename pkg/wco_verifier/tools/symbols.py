"""
Symbol input: complex literals, series expressions and PPF flags.

Expressions use z, numeric constants, the imaginary unit i (or j),
+ - * / ^ and parentheses, e.g. ``"z^2"``, ``"0.5*z/(1-0.5*z)"``,
``"(z+0.5i)/(1-0.5i*z)"``. They expand to truncated series.
"""

import ast
import re
from dataclasses import dataclass
from typing import Optional

from hardy.wco.errors import ExpressionError
from hardy.wco.maps import MobiusMap, PPFParams, ppf_map
from hardy.wco.series import (
    TruncatedSeries,
    add,
    constant,
    identity,
    multiply,
    power,
    reciprocal,
    scale,
    subtract,
)
from hardy.wco.space import WeightSequence, beta_kappa

_IMAG_SUFFIX = re.compile(r"(?<=[0-9.])[iI]\b")


def parse_complex(text: str) -> complex:
    """
    Parse "0.5", "-0.3i", "1+2i", "i" or "1-j" into a complex number.

    Raises:
        ExpressionError: If the text is not a complex literal.
    """
    s = str(text).strip().replace(" ", "").lower().replace("i", "j")
    try:
        return complex(s)
    except ValueError:
        raise ExpressionError(f"not a complex number: {text!r}") from None


class _SeriesBuilder(ast.NodeVisitor):
    def __init__(self, degree: int):
        self.degree = degree

    def generic_visit(self, node):
        raise ExpressionError(f"unsupported syntax: {ast.dump(node)}")

    def visit_Expression(self, node):
        return self.visit(node.body)

    def visit_Constant(self, node):
        if isinstance(node.value, bool) or not isinstance(node.value, (int, float, complex)):
            raise ExpressionError(f"unsupported constant {node.value!r}")
        return constant(node.value, self.degree)

    def visit_Name(self, node):
        if node.id == "z":
            return identity(self.degree)
        if node.id in ("i", "j"):
            return constant(1j, self.degree)
        raise ExpressionError(f"unknown name {node.id!r}; only z and i are allowed")

    def visit_UnaryOp(self, node):
        operand = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return scale(operand, -1)
        if isinstance(node.op, ast.UAdd):
            return operand
        raise ExpressionError("unsupported unary operator")

    def visit_BinOp(self, node):
        if isinstance(node.op, ast.Pow):
            return power(self.visit(node.left), self._exponent(node.right))
        left, right = self.visit(node.left), self.visit(node.right)
        if isinstance(node.op, ast.Add):
            return add(left, right)
        if isinstance(node.op, ast.Sub):
            return subtract(left, right)
        if isinstance(node.op, ast.Mult):
            return multiply(left, right)
        if isinstance(node.op, ast.Div):
            return multiply(left, reciprocal(right))
        raise ExpressionError("unsupported operator")

    def _exponent(self, node) -> int:
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            if node.value >= 0:
                return node.value
        raise ExpressionError("exponents must be nonnegative integer literals")


def parse_series(expr: str, degree: int) -> TruncatedSeries:
    """
    Expand an expression in z to a truncated series of the given degree.

    Raises:
        ExpressionError: On syntax the grammar does not cover.
        NotInvertible: When dividing by a series that vanishes at 0.
    """
    source = _IMAG_SUFFIX.sub("j", expr.replace("^", "**"))
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {expr!r}: {exc.msg}") from None
    return _SeriesBuilder(degree).visit(tree)


@dataclass(frozen=True)
class Symbols:
    """
    A resolved (phi, psi) pair and the space it acts on.

    Attributes:
        phi: Composition symbol as a series.
        psi: Multiplier as a series.
        weights: H²(beta_kappa) weights through the truncation degree.
        kappa: Kernel exponent.
        mobius: phi as a Mobius map when it came from PPF flags.
        ppf: The PPF parameters when given.
    """
    phi: TruncatedSeries
    psi: TruncatedSeries
    weights: WeightSequence
    kappa: float
    mobius: Optional[MobiusMap] = None
    ppf: Optional[PPFParams] = None

    def describe(self) -> dict:
        if self.ppf is not None:
            return {"family": "ppf", **self.ppf.to_dict()}
        return {"family": "series", "kappa": self.kappa}


def resolve_symbols(
    trunc: int,
    kappa: float = 1.0,
    a0: str = None,
    a1: str = None,
    b: str = None,
    phi: str = None,
    psi: str = None,
    samples: int = 4096,
) -> Symbols:
    """
    Build the symbols from either ``phi``/``psi`` expressions or PPF parameters.

    PPF parameters default to a0 = 0 and b = 1; a1 is required. An expression
    for phi takes precedence, with psi defaulting to 1.

    Raises:
        ExpressionError: If neither form is given or an expression is malformed.
        NotSelfMap: If the PPF phi leaves the disk.
    """
    weights = beta_kappa(kappa, trunc)
    if phi is not None:
        return Symbols(
            parse_series(phi, trunc),
            parse_series(psi if psi is not None else "1", trunc),
            weights,
            float(kappa),
        )
    if a1 is None:
        raise ExpressionError("give either --phi (and optionally --psi) or the PPF parameters --a0/--a1/--b")
    p = PPFParams(
        parse_complex(a0 if a0 is not None else "0"),
        parse_complex(a1),
        parse_complex(b if b is not None else "1"),
        kappa,
    )
    mobius = ppf_map(p, samples)
    return Symbols(p.phi_series(trunc), p.psi_series(trunc), weights, float(kappa), mobius, p)
