from __future__ import annotations

import math
from typing import Mapping

from ..algebra import TransferMatrix2, compose
from ..elements import ChainSpec, beam_splitter, coupled_chain, mzi, phase_shifter
from .nodes import BinOp, Bs, Chain, CircuitAst, Expr, Mzi, Name, Neg, Num, Phase, Pi


class CircuitError(Exception):
    """Raised when a parsed circuit cannot be evaluated."""


class UnboundParameterError(CircuitError):
    def __init__(self, name: str, line: int = 0, column: int = 0):
        self.name = name
        self.line = line
        self.column = column
        where = f" at {line}:{column}" if line else ""
        super().__init__(f"unbound parameter {name!r}{where}")


class ExpressionError(CircuitError):
    pass


def evaluate(e: Expr, bindings: Mapping[str, float]) -> float:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Pi):
        return math.pi
    if isinstance(e, Name):
        if e.ident not in bindings:
            raise UnboundParameterError(e.ident, e.line, e.column)
        return float(bindings[e.ident])
    if isinstance(e, Neg):
        return -evaluate(e.operand, bindings)
    a = evaluate(e.left, bindings)
    b = evaluate(e.right, bindings)
    if e.op == "+":
        out = a + b
    elif e.op == "-":
        out = a - b
    elif e.op == "*":
        out = a * b
    else:
        if b == 0:
            raise ExpressionError("division by zero in phase expression")
        out = a / b
    if not math.isfinite(out):
        raise ExpressionError("phase expression overflowed to a non-finite value")
    return out


def compile_circuit(ast: CircuitAst, bindings: Mapping[str, float] | None = None) -> TransferMatrix2:
    """Compose the program into one transfer matrix.

    The first statement acts first on the field, so it ends up as the
    rightmost factor. An empty program compiles to the identity.
    """
    bindings = dict(bindings or {})
    for name, value in bindings.items():
        if not math.isfinite(value):
            raise ExpressionError(f"binding {name}={value!r} is not finite")

    m = TransferMatrix2.identity()
    for st in ast.statements:
        if isinstance(st, Bs):
            step = beam_splitter()
        elif isinstance(st, Phase):
            step = phase_shifter(st.arm, evaluate(st.theta, bindings))
        elif isinstance(st, Mzi):
            step = mzi(evaluate(st.phi, bindings))
        elif isinstance(st, Chain):
            step = coupled_chain(ChainSpec(st.n, evaluate(st.phi, bindings), evaluate(st.psi, bindings)))
        else:  # pragma: no cover
            raise TypeError(st)
        m = compose(step, m)
    return m
