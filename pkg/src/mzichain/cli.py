"""Command-line front end.

Subcommands::

    mzichain simulate --n 2 --phi pi/2 --psi pi
    mzichain simulate --circuit circuits/two_block.mzc --param phi=0 --param psi=0
    mzichain sweep --n 2 --phi-range 0:2*pi:721 --psi 0,pi --format csv -o out.csv
    mzichain verify [--max-n 8] [--tol 1e-12]
    mzichain parse circuits/two_block.mzc

Angles are radians and may be written as phase expressions (``pi/2``,
``-3*pi/4``); ``--degrees`` converts numeric input at the boundary.

Exit codes: 0 ok, 1 oracle failure, 2 bad arguments, 3 parse error,
4 unbound parameter / bad circuit expression, 5 unwritable output,
6 no closed form for the requested (n, psi).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from .algebra import output_intensities
from .closed_form import UnsupportedFormulaError, closed_form_intensities, psi_case
from .dsl import CircuitError, ParseError, compile_circuit, evaluate, parse, parse_expression, pretty_print
from .elements import chain
from .export import fmt_float, result_to_json, rows_to_csv
from .fringes import MIN_POINTS, fringe_report
from .oracle import OracleVerificationError, verify_oracle
from .sweeps import Engine, EngineMismatchError, SweepConfig, sweep

EXIT_OK = 0
EXIT_ORACLE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_UNBOUND = 4
EXIT_OUTPUT = 5
EXIT_UNSUPPORTED = 6


class UsageError(Exception):
    pass


def _angle(text: str, degrees: bool) -> float:
    try:
        value = evaluate(parse_expression(text), {})
    except (ParseError, CircuitError) as exc:
        raise UsageError(f"invalid angle {text!r}: {exc}") from None
    return math.radians(value) if degrees else value


def _phi_range(text: str, degrees: bool) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--phi-range must be start:stop:points, got {text!r}")
    start, stop = _angle(parts[0], degrees), _angle(parts[1], degrees)
    try:
        points = int(parts[2])
    except ValueError:
        raise UsageError(f"phi-range points must be an integer, got {parts[2]!r}") from None
    if points < 2:
        raise UsageError("phi-range needs at least 2 points")
    if not start < stop:
        raise UsageError("phi-range start must be below stop")
    return start, stop, points


def _bindings(params: Sequence[str], degrees: bool) -> dict[str, float]:
    out = {}
    for item in params:
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name.isidentifier():
            raise UsageError(f"--param expects name=value, got {item!r}")
        out[name] = _angle(value, degrees)
    return out


def _check_n(n: Optional[int]) -> int:
    if n is None:
        raise UsageError("--n is required")
    if n < 1:
        raise UsageError("n must be ≥ 1")
    return n


def _read_circuit(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            source = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read circuit file {path!r}: {exc}") from None
    return parse(source)


def run_simulate(args) -> int:
    if args.circuit:
        ast = _read_circuit(args.circuit)
        bindings = _bindings(args.param, args.degrees)
        upper, lower = output_intensities(compile_circuit(ast, bindings))
        psi = bindings.get("psi")
    else:
        n = _check_n(args.n)
        if args.phi is None or args.psi is None:
            raise UsageError("--phi and --psi are required without --circuit")
        phi, psi = _angle(args.phi, args.degrees), _angle(args.psi, args.degrees)
        if args.engine == Engine.CLOSED_FORM.value:
            upper, lower = closed_form_intensities(n, phi, psi)
        else:
            upper, lower = output_intensities(chain(n, phi, psi))
    print(f"i_upper {fmt_float(upper)}")
    print(f"i_lower {fmt_float(lower)}")
    print(f"r {fmt_float(4 * upper * lower)}")
    print(f"psi_case {psi_case(psi).value if psi is not None else 'n/a'}")
    return EXIT_OK


def _covers_window(config: SweepConfig) -> bool:
    span, step = config.phi_stop - config.phi_start, config.phi_step
    return config.phi_points >= MIN_POINTS and (
        abs(span - 2 * math.pi) <= step / 2 or abs(span + step - 2 * math.pi) <= step / 2
    )


def run_sweep(args) -> int:
    n = _check_n(args.n)
    start, stop, points = _phi_range(args.phi_range, args.degrees)
    psis = tuple(_angle(p, args.degrees) for p in args.psi.split(","))
    config = SweepConfig(n, start, stop, points, psis, Engine(args.engine))
    result = sweep(config)

    if args.format == "csv":
        text = rows_to_csv(result.rows)
    else:
        reports = None
        if _covers_window(config):
            reports = [fringe_report(rows) for rows in result.slices().values()]
        text = result_to_json(result, reports)

    if args.output in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output!r}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    return EXIT_OK


def run_verify(args) -> int:
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    if args.max_n < 1:
        raise UsageError("--max-n must be ≥ 1")
    try:
        report = verify_oracle(args.max_n, args.tol)
    except OracleVerificationError as exc:
        print(exc.report.render())
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    print(report.render())
    return EXIT_OK


def run_parse(args) -> int:
    ast = _read_circuit(args.circuit)
    sys.stdout.write(pretty_print(ast))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mzichain",
        description="Transfer-matrix simulator for n-coupled Mach-Zehnder interferometer chains",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="evaluate one operating point")
    p.add_argument("--n", type=int, help="number of phi-MZIs in the chain")
    p.add_argument("--phi", help="MZI phase (radians or expression)")
    p.add_argument("--psi", help="coupler phase (radians or expression)")
    p.add_argument("--circuit", help="path to a .mzc circuit file")
    p.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                   help="bind a circuit identifier (repeatable)")
    p.add_argument("--engine", choices=[Engine.MATRIX.value, Engine.CLOSED_FORM.value],
                   default=Engine.MATRIX.value)
    p.add_argument("--degrees", action="store_true", help="interpret angles in degrees")
    p.set_defaults(func=run_simulate)

    p = sub.add_parser("sweep", help="sweep phi (and a list of psi) and emit CSV/JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--phi-range", default="0:2*pi:721", metavar="START:STOP:POINTS",
                   help="endpoint-inclusive phi grid (default 0:2*pi:721)")
    p.add_argument("--psi", default="pi", help="comma-separated psi values (default pi)")
    p.add_argument("--engine", choices=[e.value for e in Engine], default=Engine.MATRIX.value)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("-o", "--output", help="output file (default: standard output)")
    p.add_argument("--degrees", action="store_true")
    p.set_defaults(func=run_sweep)

    p = sub.add_parser("verify", help="cross-check closed forms against matrix composition")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("parse", help="parse a .mzc file and print its canonical form")
    p.add_argument("circuit")
    p.set_defaults(func=run_parse)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except ParseError as exc:
        where = f"{args.circuit}:" if getattr(args, "circuit", None) else ""
        print(f"{where}{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
        return EXIT_PARSE
    except CircuitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNBOUND
    except UnsupportedFormulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except EngineMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
