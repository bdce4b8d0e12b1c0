"""Optical elements and the n-coupled MZI chain.

The chain is the cascade

    M = D_n . MZI(phi) . D_{n-1} . MZI(phi) ... D_1 . MZI(phi)

where each coupler ``D_k`` is a psi phase shifter. Couplers alternate arms:
upper after odd-indexed MZIs, lower after even ones. For n = 2 this is the
two-coupler factorization of the doubly coupled interferometer. The trailing
coupler ``D_n`` is diagonal and never changes output intensities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .algebra import TransferMatrix2, compose, phase_factor

_SQRT1_2 = 1 / math.sqrt(2)


class Arm(str, Enum):
    UPPER = "upper"
    LOWER = "lower"


def beam_splitter() -> TransferMatrix2:
    """Balanced 50/50 coupler, (1/sqrt 2) [[1, i], [i, 1]]."""
    return TransferMatrix2(_SQRT1_2 + 0j, 1j * _SQRT1_2, 1j * _SQRT1_2, _SQRT1_2 + 0j)


def phase_shifter(arm: Arm | str, theta: float) -> TransferMatrix2:
    arm = Arm(arm)
    p = phase_factor(theta)
    if arm is Arm.UPPER:
        return TransferMatrix2.diag(p, 1)
    return TransferMatrix2.diag(1, p)


def mzi(phi: float) -> TransferMatrix2:
    """BS . P_lower(phi) . BS."""
    bs = beam_splitter()
    return compose(bs, compose(phase_shifter(Arm.LOWER, phi), bs))


def coupler_arm(k: int) -> Arm:
    """Arm carrying the psi coupler that follows the k-th MZI (1-based)."""
    return Arm.UPPER if k % 2 else Arm.LOWER


@dataclass(frozen=True)
class BeamSplitter:
    def matrix(self) -> TransferMatrix2:
        return beam_splitter()


@dataclass(frozen=True)
class PhaseShifter:
    arm: Arm
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "arm", Arm(self.arm))
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")

    def matrix(self) -> TransferMatrix2:
        return phase_shifter(self.arm, self.theta)


@dataclass(frozen=True)
class MziBlock:
    phi: float

    def __post_init__(self):
        if not math.isfinite(self.phi):
            raise ValueError("phi must be finite")

    def matrix(self) -> TransferMatrix2:
        return mzi(self.phi)


Element = Union[BeamSplitter, PhaseShifter, MziBlock]


def cascade(elements) -> TransferMatrix2:
    """Compose elements in physical order (first element acts first)."""
    m = TransferMatrix2.identity()
    for el in elements:
        m = compose(el.matrix(), m)
    return m


@dataclass(frozen=True)
class ChainSpec:
    n: int
    phi: float
    psi: float
    coupler_policy: str = "alternating"
    include_trailing_coupler: bool = True

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ValueError("n must be >= 1")
        if not (math.isfinite(self.phi) and math.isfinite(self.psi)):
            raise ValueError("phi and psi must be finite")
        if self.coupler_policy != "alternating":
            raise ValueError(f"unknown coupler policy {self.coupler_policy!r}")


def coupled_chain(spec: ChainSpec) -> TransferMatrix2:
    block = mzi(spec.phi)
    m = block
    for k in range(1, spec.n):
        m = compose(phase_shifter(coupler_arm(k), spec.psi), m)
        m = compose(block, m)
    if spec.include_trailing_coupler:
        m = compose(phase_shifter(coupler_arm(spec.n), spec.psi), m)
    return m


def chain(n: int, phi: float, psi: float, include_trailing_coupler: bool = True) -> TransferMatrix2:
    """Shorthand for ``coupled_chain(ChainSpec(...))``."""
    return coupled_chain(ChainSpec(n, phi, psi, include_trailing_coupler=include_trailing_coupler))
