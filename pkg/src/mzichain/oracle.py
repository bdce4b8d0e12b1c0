"""Cross-check every closed form against explicit matrix composition.

The matrix engine (``elements.coupled_chain``) is the reference. For each
formula we record the worst absolute deviation on a fixed grid and where it
occurred. Formulas known to disagree with the composition (the printed
lower-port variants and the 1/16 prefactor) are evaluated too, but only
reported as flags; they never fail verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import closed_form as cf
from .algebra import global_phase_error, output_intensities, unitarity_error
from .elements import chain

PSI_GRID = (
    0.0,
    math.pi / 4,
    -math.pi / 4,
    math.pi / 2,
    -math.pi / 2,
    3 * math.pi / 4,
    -3 * math.pi / 4,
    math.pi,
    -math.pi,
)
PHI_POINTS = 721

#: formula id -> description, in report order
FORMULAS = {
    "single-mzi": "single MZI intensities (n=1, any psi)",
    "double-upper": "doubly coupled upper port I_A (n=2)",
    "double-lower": "doubly coupled lower port I_B = (1/4)(1-cos psi)(1-cos 2phi) (n=2)",
    "n-chain": "n-chain intensities at psi=+-pi",
    "intensity-product": "normalized intensity product sin^2(n phi) vs 4 I_upper I_lower at psi=+-pi",
    "n-matrix-intensities": "closed-form n-chain matrix vs chain at psi=+-pi, intensities",
    "n-matrix-phase": "closed-form n-chain matrix vs chain at psi=+-pi, |M1^dag M2 - c I|",
    "conservation": "|I_upper + I_lower - 1| for every chain on the grid",
    "unitarity": "max entry of |M^dag M - I| for every chain on the grid",
}

#: probe where the printed lower-port forms are reported regardless of grid argmax
PROBE = (math.pi / 2, math.pi / 2)


@dataclass
class FormulaCheck:
    formula: str
    description: str
    max_abs_deviation: float = 0.0
    argmax: Optional[tuple[int, float, float]] = None
    samples: int = 0

    def update(self, deviation: float, n: int, phi: float, psi: float) -> None:
        self.samples += 1
        if self.argmax is None or deviation > self.max_abs_deviation:
            self.max_abs_deviation = deviation
            self.argmax = (n, phi, psi)

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "description": self.description,
            "max_abs_deviation": self.max_abs_deviation,
            "argmax": _point(self.argmax),
            "samples": self.samples,
        }


@dataclass(frozen=True)
class PrintedFormulaFlag:
    formula: str
    phi: float
    psi: float
    printed_value: float
    oracle_value: float
    note: str = ""

    @property
    def deviation(self) -> float:
        return abs(self.printed_value - self.oracle_value)

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "phi": self.phi,
            "psi": self.psi,
            "printed_value": self.printed_value,
            "oracle_value": self.oracle_value,
            "note": self.note,
        }


@dataclass
class OracleReport:
    max_n: int
    tol: float
    phi_points: int
    psi_values: tuple[float, ...]
    checks: dict[str, FormulaCheck] = field(default_factory=dict)
    printed_formula_flags: list[PrintedFormulaFlag] = field(default_factory=list)

    @property
    def grid_description(self) -> str:
        if self.psi_values == PSI_GRID:
            psis = "{0, +-pi/4, +-pi/2, +-3pi/4, +-pi}"
        else:
            psis = "{" + ", ".join(f"{p:.6g}" for p in self.psi_values) + "}"
        return f"n in 1..{self.max_n}; psi in {psis}; {self.phi_points} equispaced phi in [0, 2pi]"

    @property
    def max_abs_deviation(self) -> float:
        return max((c.max_abs_deviation for c in self.checks.values() if c.samples), default=0.0)

    @property
    def argmax(self) -> Optional[tuple[int, float, float]]:
        worst = self.worst_check()
        return worst.argmax if worst else None

    def worst_check(self) -> Optional[FormulaCheck]:
        sampled = [c for c in self.checks.values() if c.samples]
        return max(sampled, key=lambda c: c.max_abs_deviation) if sampled else None

    @property
    def passed(self) -> bool:
        return self.max_abs_deviation <= self.tol

    def to_dict(self) -> dict:
        return {
            "grid": self.grid_description,
            "tolerance": self.tol,
            "passed": self.passed,
            "max_abs_deviation": self.max_abs_deviation,
            "argmax": _point(self.argmax),
            "checks": [c.to_dict() for c in self.checks.values() if c.samples],
            "printed_formula_flags": [f.to_dict() for f in self.printed_formula_flags],
        }

    def render(self) -> str:
        lines = [
            "closed-form vs matrix-composition oracle",
            f"grid: {self.grid_description}",
            f"tolerance: {self.tol:.3e}",
            "",
        ]
        for c in self.checks.values():
            if not c.samples:
                continue
            status = "ok" if c.max_abs_deviation <= self.tol else "FAIL"
            lines.append(
                f"  [{status:>4}] {c.formula:<20} max|dev| = {c.max_abs_deviation:.3e}"
                f"  at {_fmt_point(c.argmax)}  ({c.samples} samples)"
            )
        lines.append("")
        if self.printed_formula_flags:
            lines.append("errata (printed forms that disagree with the composition):")
            for f in self.printed_formula_flags:
                lines.append(
                    f"  {f.formula:<26} phi={f.phi:.6g} psi={f.psi:.6g}: printed {f.printed_value:.6g}"
                    f" vs oracle {f.oracle_value:.6g}  {f.note}".rstrip()
                )
        else:
            lines.append("errata: none flagged on this grid")
        lines.append("")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(
            f"result: {verdict} (max|dev| = {self.max_abs_deviation:.3e} at {_fmt_point(self.argmax)})"
        )
        return "\n".join(lines)


class OracleVerificationError(AssertionError):
    def __init__(self, report: OracleReport):
        self.report = report
        worst = report.worst_check()
        super().__init__(
            f"{worst.formula} deviates by {worst.max_abs_deviation:.3e} > tol {report.tol:.3e} "
            f"at {_fmt_point(worst.argmax)}"
        )


def _point(p) -> Optional[dict]:
    return None if p is None else {"n": p[0], "phi": p[1], "psi": p[2]}


def _fmt_point(p) -> str:
    if p is None:
        return "-"
    return f"(n={p[0]}, phi={p[1]:.6g}, psi={p[2]:.6g})"


def _is_pi(psi: float) -> bool:
    return cf.psi_case(psi, 1e-12) is cf.PsiCase.QUANTUM


def build_report(max_n: int = 8, tol: float = 1e-12, phi_points: int = PHI_POINTS,
                 psi_values=PSI_GRID) -> OracleReport:
    """Run the grid and collect deviations without raising."""
    if isinstance(max_n, bool) or int(max_n) != max_n or max_n < 1:
        raise ValueError("max_n must be >= 1")
    if not tol > 0:
        raise ValueError("tol must be positive")
    report = OracleReport(max_n, tol, phi_points, tuple(psi_values))
    checks = report.checks = {k: FormulaCheck(k, d) for k, d in FORMULAS.items()}
    phis = [float(p) for p in np.linspace(0.0, 2 * math.pi, phi_points)]

    printed_b = FormulaCheck("double-lower-printed", "")
    printed_iii = FormulaCheck("intermediate-lower-printed", "")
    printed_b_worst = printed_iii_worst = None

    for n in range(1, max_n + 1):
        for psi in psi_values:
            at_pi = _is_pi(psi)
            for phi in phis:
                m = chain(n, phi, psi)
                upper, lower = output_intensities(m)
                checks["conservation"].update(abs(upper + lower - 1), n, phi, psi)
                checks["unitarity"].update(unitarity_error(m), n, phi, psi)

                if n == 1:
                    ref = cf.single_mzi_intensities(phi)
                    checks["single-mzi"].update(max(abs(upper - ref.upper), abs(lower - ref.lower)), n, phi, psi)
                if n == 2:
                    ref = cf.double_mzi_intensities(phi, psi)
                    checks["double-upper"].update(abs(upper - ref.upper), n, phi, psi)
                    checks["double-lower"].update(abs(lower - ref.lower), n, phi, psi)

                    dev = abs(cf.printed_double_mzi_lower(phi, psi) - lower)
                    if printed_b_worst is None or dev > printed_b.max_abs_deviation:
                        printed_b_worst = (phi, psi, cf.printed_double_mzi_lower(phi, psi), lower)
                    printed_b.update(dev, n, phi, psi)
                    if cf.psi_case(psi, 1e-12) is cf.PsiCase.INTERMEDIATE:
                        dev = abs(cf.printed_intermediate_lower(phi) - lower)
                        if printed_iii_worst is None or dev > printed_iii.max_abs_deviation:
                            printed_iii_worst = (phi, psi, cf.printed_intermediate_lower(phi), lower)
                        printed_iii.update(dev, n, phi, psi)
                if at_pi:
                    ref = cf.n_chain_intensities(n, phi)
                    checks["n-chain"].update(max(abs(upper - ref.upper), abs(lower - ref.lower)), n, phi, psi)
                    checks["intensity-product"].update(abs(cf.intensity_product(n, phi) - 4 * upper * lower), n, phi, psi)
                    closed = cf.n_chain_matrix_closed_form(n, phi)
                    cu, cl = output_intensities(closed)
                    checks["n-matrix-intensities"].update(max(abs(upper - cu), abs(lower - cl)), n, phi, psi)
                    checks["n-matrix-phase"].update(global_phase_error(closed, m), n, phi, psi)

    if max_n >= 2:
        report.printed_formula_flags = _printed_flags(tol, printed_b, printed_b_worst,
                                                      printed_iii, printed_iii_worst)
    return report


def _printed_flags(tol, printed_b, b_worst, printed_iii, iii_worst) -> list[PrintedFormulaFlag]:
    flags = []
    phi, psi = PROBE
    probe_lower = output_intensities(chain(2, phi, psi)).lower

    if printed_b.max_abs_deviation > tol:
        flags.append(PrintedFormulaFlag("double-lower-printed", phi, psi,
                                        cf.printed_double_mzi_lower(phi, psi), probe_lower, "probe"))
        flags.append(PrintedFormulaFlag("double-lower-printed", *b_worst, "grid argmax"))
    if printed_iii.samples and printed_iii.max_abs_deviation > tol:
        flags.append(PrintedFormulaFlag("intermediate-lower-printed", phi, psi,
                                        cf.printed_intermediate_lower(phi), probe_lower, "probe"))
        flags.append(PrintedFormulaFlag("intermediate-lower-printed", *iii_worst, "grid argmax"))

    # 1/16 prefactor: identity basis, where the composed upper intensity is exactly 1
    printed = output_intensities(cf.printed_double_mzi_matrix(0.0, 0.0)).upper
    oracle = output_intensities(chain(2, 0.0, 0.0)).upper
    if abs(printed - oracle) > tol:
        flags.append(PrintedFormulaFlag("double-prefactor", 0.0, 0.0, printed, oracle,
                                        "1/16 prefactor; normalized product needs 1/4"))
    return flags


def verify_oracle(max_n: int = 8, tol: float = 1e-12, **grid) -> OracleReport:
    """Build the report and raise :class:`OracleVerificationError` if any
    implemented formula deviates from the matrix engine by more than ``tol``."""
    report = build_report(max_n, tol, **grid)
    if not report.passed:
        raise OracleVerificationError(report)
    return report
