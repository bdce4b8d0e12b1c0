"""Fringe-period estimation over one 2*pi phase window.

Minima of the upper-port intensity are located on the sampled grid (no
interpolation), so the period estimate is accurate to one grid step. The
window is treated as periodic: an endpoint-inclusive grid has its duplicate
last sample dropped and the first sample compares against the last.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .sweeps import SweepRow

MIN_POINTS = 64
PLATEAU_TOL = 1e-12
TWO_PI = 2 * math.pi


class FringeClass(str, Enum):
    CLASSICAL = "classical"
    SUB_CLASSICAL = "sub-classical"
    QUANTUM_BOUND = "quantum-bound"


class TooFewPointsError(ValueError):
    pass


@dataclass(frozen=True)
class FringeReport:
    n: int
    psi: float
    estimated_period: float
    minima_count: int
    claimed_period: float
    resolution_wavelengths: float
    visibility: float
    grid_step: float
    classification: FringeClass

    def to_dict(self) -> dict:
        d = asdict(self)
        d["classification"] = self.classification.value
        if math.isinf(self.estimated_period):
            d["estimated_period"] = None
        return d


def find_minima(values: Sequence[float], periodic: bool = True, tol: float = PLATEAU_TOL) -> list[float]:
    """Fractional indices of strict local minima.

    Runs of samples equal within ``tol`` are merged into one plateau, which
    counts as a minimum (at its midpoint) only if both neighbouring samples
    are larger. A fully flat signal has no minima.
    """
    v = np.asarray(values, dtype=float)
    size = len(v)
    if size == 0:
        return []
    # collapse plateaus into (start, length, value) runs
    runs: list[tuple[int, int, float]] = []
    start = 0
    for i in range(1, size + 1):
        if i == size or abs(v[i] - v[start]) > tol:
            runs.append((start, i - start, float(v[start])))
            start = i
    if periodic and len(runs) > 1 and abs(runs[0][2] - runs[-1][2]) <= tol:
        s, length, value = runs.pop()
        first = runs[0]
        runs[0] = (s, length + first[1], value)
    if len(runs) < (3 if not periodic else 2):
        return []

    minima = []
    count = len(runs)
    for k, (s, length, value) in enumerate(runs):
        if periodic:
            prev, nxt = runs[k - 1][2], runs[(k + 1) % count][2]
        else:
            if k == 0 or k == count - 1:
                continue
            prev, nxt = runs[k - 1][2], runs[k + 1][2]
        if prev > value + tol and nxt > value + tol:
            minima.append((s + (length - 1) / 2) % size)
    return sorted(minima)


def classify(n: int, period: float, step: float, visibility: float) -> FringeClass:
    if period >= TWO_PI * (1 - step):
        return FringeClass.CLASSICAL
    full_contrast = 1 - visibility <= (n * step) ** 2 / 2 + 1e-12
    if n >= 2 and abs(period - TWO_PI / n) <= step and full_contrast:
        return FringeClass.QUANTUM_BOUND
    return FringeClass.SUB_CLASSICAL


def fringe_report(rows: Sequence[SweepRow]) -> FringeReport:
    """Estimate the upper-port fringe period of one (n, psi) slice."""
    if len(rows) < MIN_POINTS:
        raise TooFewPointsError(f"need at least {MIN_POINTS} samples, got {len(rows)}")
    n, psi = rows[0].n, rows[0].psi
    if any(r.n != n or r.psi != psi for r in rows):
        raise ValueError("rows must come from a single (n, psi) slice")
    phi = np.array([r.phi for r in rows])
    upper = np.array([r.i_upper for r in rows])
    step = float(phi[1] - phi[0])
    span = float(phi[-1] - phi[0])
    # spans within half a step of 2*pi are accepted, e.g. a stop of 6.2831853
    if abs(span - TWO_PI) <= step / 2:
        phi, upper = phi[:-1], upper[:-1]
    elif abs(span + step - TWO_PI) > step / 2:
        raise ValueError(f"rows must cover exactly one 2*pi window, got span {span!r}")

    idx = find_minima(upper, periodic=True)
    positions = [phi[0] + i * step for i in idx]
    count = len(positions)
    if count == 0:
        period = math.inf
    elif count == 1:
        period = TWO_PI
    else:
        period = (positions[-1] - positions[0]) / (count - 1)

    hi, lo = float(upper.max()), float(upper.min())
    visibility = (hi - lo) / (hi + lo) if hi + lo > 0 else 0.0
    return FringeReport(
        n=n,
        psi=psi,
        estimated_period=period,
        minima_count=count,
        claimed_period=TWO_PI / n,
        resolution_wavelengths=1 / (2 * n),
        visibility=visibility,
        grid_step=step,
        classification=classify(n, period, step, visibility),
    )
