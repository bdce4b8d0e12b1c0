"""Parameter sweeps over (phi, psi) for a fixed chain length n."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .algebra import output_intensities
from .closed_form import UnsupportedFormulaError, closed_form_intensities
from .elements import chain

#: matrix/closed-form agreement required by ``engine="both"``
ENGINE_TOL = 1e-12


class Engine(str, Enum):
    MATRIX = "matrix"
    CLOSED_FORM = "closed_form"
    BOTH = "both"


class EngineMismatchError(RuntimeError):
    def __init__(self, report):
        self.report = report
        super().__init__(
            f"matrix and closed-form engines disagree by {report.max_abs_deviation:.3e} "
            f"at {report.argmax}"
        )


@dataclass(frozen=True)
class SweepConfig:
    n: int
    phi_start: float = 0.0
    phi_stop: float = 2 * math.pi
    phi_points: int = 721
    psi_values: tuple[float, ...] = (math.pi,)
    engine: Engine = Engine.MATRIX

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ValueError("n must be >= 1")
        if self.phi_points < 2:
            raise ValueError("phi_points must be >= 2")
        if not self.phi_start < self.phi_stop:
            raise ValueError("phi_start must be < phi_stop")
        if not self.psi_values:
            raise ValueError("psi_values must not be empty")
        object.__setattr__(self, "psi_values", tuple(float(p) for p in self.psi_values))
        object.__setattr__(self, "engine", Engine(self.engine))

    def phi_grid(self) -> np.ndarray:
        return np.linspace(self.phi_start, self.phi_stop, self.phi_points)

    @property
    def phi_step(self) -> float:
        return (self.phi_stop - self.phi_start) / (self.phi_points - 1)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "phi_start": self.phi_start,
            "phi_stop": self.phi_stop,
            "phi_points": self.phi_points,
            "psi_values": list(self.psi_values),
            "engine": self.engine.value,
        }


@dataclass(frozen=True)
class SweepRow:
    n: int
    phi: float
    psi: float
    i_upper: float
    i_lower: float
    r: float

    @classmethod
    def from_intensities(cls, n: int, phi: float, psi: float, upper: float, lower: float) -> SweepRow:
        return cls(n, phi, psi, upper, lower, 4 * upper * lower)


@dataclass
class EngineComparison:
    """Worst matrix-vs-closed-form deviation seen during an ``engine="both"`` sweep."""

    max_abs_deviation: float = 0.0
    argmax: Optional[tuple[int, float, float]] = None
    points: int = 0

    def update(self, deviation: float, where: tuple[int, float, float]) -> None:
        self.points += 1
        if self.argmax is None or deviation > self.max_abs_deviation:
            self.max_abs_deviation = deviation
            self.argmax = where

    def to_dict(self) -> dict:
        return {
            "engines": ["matrix", "closed_form"],
            "max_abs_deviation": self.max_abs_deviation,
            "argmax": None if self.argmax is None else dict(zip(("n", "phi", "psi"), self.argmax)),
            "points": self.points,
            "tolerance": ENGINE_TOL,
        }


@dataclass
class SweepResult:
    config: SweepConfig
    rows: list[SweepRow]
    oracle_report: Optional[EngineComparison] = None

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def slices(self) -> dict[float, list[SweepRow]]:
        """Rows grouped by psi, preserving grid order."""
        out: dict[float, list[SweepRow]] = {}
        for row in self.rows:
            out.setdefault(row.psi, []).append(row)
        return out


def matrix_row(n: int, phi: float, psi: float) -> SweepRow:
    upper, lower = output_intensities(chain(n, phi, psi))
    return SweepRow.from_intensities(n, phi, psi, upper, lower)


def closed_form_row(n: int, phi: float, psi: float) -> SweepRow:
    upper, lower = closed_form_intensities(n, phi, psi)
    return SweepRow.from_intensities(n, phi, psi, upper, lower)


def sweep(config: SweepConfig) -> SweepResult:
    """Evaluate every (psi, phi) grid point, psi-major.

    ``engine="both"`` emits the matrix-engine rows, checks the closed form at
    every point and raises :class:`EngineMismatchError` above ``ENGINE_TOL``.
    """
    phis = [float(p) for p in config.phi_grid()]
    n = config.n
    rows: list[SweepRow] = []
    comparison = EngineComparison() if config.engine is Engine.BOTH else None
    for psi in config.psi_values:
        for phi in phis:
            if config.engine is Engine.CLOSED_FORM:
                rows.append(closed_form_row(n, phi, psi))
                continue
            row = matrix_row(n, phi, psi)
            rows.append(row)
            if comparison is not None:
                try:
                    ref = closed_form_row(n, phi, psi)
                except UnsupportedFormulaError:
                    continue
                dev = max(abs(row.i_upper - ref.i_upper), abs(row.i_lower - ref.i_lower))
                comparison.update(dev, (n, phi, psi))
    if comparison is not None and comparison.max_abs_deviation > ENGINE_TOL:
        raise EngineMismatchError(comparison)
    return SweepResult(config, rows, comparison)


def sweep_2d(n: int, phi_grid: Sequence[float], psi_grid: Sequence[float]) -> list[list[SweepRow]]:
    """Matrix-engine surface indexed ``[psi_index][phi_index]``."""
    if len(phi_grid) == 0 or len(psi_grid) == 0:
        raise ValueError("grids must be non-empty")
    return [[matrix_row(n, float(phi), float(psi)) for phi in phi_grid] for psi in psi_grid]


def r_surface(surface: list[list[SweepRow]]) -> np.ndarray:
    return np.array([[row.r for row in line] for line in surface])
