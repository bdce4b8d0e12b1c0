"""AST for .mzc circuit programs, plus the canonical pretty-printer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class Name:
    ident: str
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: Expr
    right: Expr


Expr = Union[Num, Pi, Name, Neg, BinOp]


@dataclass(frozen=True)
class Bs:
    pass


@dataclass(frozen=True)
class Phase:
    arm: str
    theta: Expr


@dataclass(frozen=True)
class Mzi:
    phi: Expr


@dataclass(frozen=True)
class Chain:
    n: int
    phi: Expr
    psi: Expr


Statement = Union[Bs, Phase, Mzi, Chain]


@dataclass(frozen=True)
class CircuitAst:
    statements: tuple[Statement, ...] = ()

    def identifiers(self) -> set[str]:
        names: set[str] = set()
        for st in self.statements:
            for e in _statement_exprs(st):
                names |= expr_identifiers(e)
        return names


def _statement_exprs(st: Statement) -> tuple[Expr, ...]:
    if isinstance(st, Phase):
        return (st.theta,)
    if isinstance(st, Mzi):
        return (st.phi,)
    if isinstance(st, Chain):
        return (st.phi, st.psi)
    return ()


def expr_identifiers(e: Expr) -> set[str]:
    if isinstance(e, Name):
        return {e.ident}
    if isinstance(e, Neg):
        return expr_identifiers(e.operand)
    if isinstance(e, BinOp):
        return expr_identifiers(e.left) | expr_identifiers(e.right)
    return set()


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
_UNARY_PREC = 3


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return _UNARY_PREC
    return 4


def format_expr(e: Expr) -> str:
    if isinstance(e, Num):
        return repr(float(e.value))
    if isinstance(e, Pi):
        return "pi"
    if isinstance(e, Name):
        return e.ident
    if isinstance(e, Neg):
        inner = format_expr(e.operand)
        return f"-({inner})" if _prec(e.operand) < _UNARY_PREC else f"-{inner}"
    p = _PREC[e.op]
    left = format_expr(e.left)
    right = format_expr(e.right)
    if _prec(e.left) < p:
        left = f"({left})"
    # operators are left-associative, so an equal-precedence right child needs parens
    if _prec(e.right) <= p:
        right = f"({right})"
    return f"{left} {e.op} {right}"


def format_statement(st: Statement) -> str:
    if isinstance(st, Bs):
        return "bs;"
    if isinstance(st, Phase):
        return f"phase({st.arm}, {format_expr(st.theta)});"
    if isinstance(st, Mzi):
        return f"mzi({format_expr(st.phi)});"
    return f"chain({st.n}, {format_expr(st.phi)}, {format_expr(st.psi)});"


def pretty_print(ast: CircuitAst) -> str:
    return "".join(format_statement(st) + "\n" for st in ast.statements)
