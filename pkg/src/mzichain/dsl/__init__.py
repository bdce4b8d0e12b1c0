"""The .mzc optical-circuit description language."""

from .compiler import CircuitError, ExpressionError, UnboundParameterError, compile_circuit, evaluate
from .nodes import BinOp, Bs, Chain, CircuitAst, Mzi, Name, Neg, Num, Phase, Pi, pretty_print
from .parser import KEYWORDS, ParseError, parse, parse_expression, tokenize

__all__ = [
    "BinOp",
    "Bs",
    "Chain",
    "CircuitAst",
    "CircuitError",
    "ExpressionError",
    "KEYWORDS",
    "Mzi",
    "Name",
    "Neg",
    "Num",
    "ParseError",
    "Phase",
    "Pi",
    "UnboundParameterError",
    "compile_circuit",
    "evaluate",
    "parse",
    "parse_expression",
    "pretty_print",
    "tokenize",
]
