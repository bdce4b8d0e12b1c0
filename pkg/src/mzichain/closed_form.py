"""Closed-form intensities for single, doubly coupled and n-coupled MZIs.

All intensities are normalized to I0 = 1. The doubly coupled lower-port
intensity is the form obtained by expanding the two-MZI matrix product,

    I_B = (1/4)(1 - cos psi)(1 - cos 2 phi),

which keeps I_A + I_B = 1. Alternative lower-port forms that disagree with
the matrix product are kept as ``printed_*`` functions so the oracle can flag
them.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

from .algebra import IntensityPair, TransferMatrix2, compose, scale

#: default tolerance (radians) for recognising named psi bases
PSI_TOL = 1e-6


class UnsupportedFormulaError(ValueError):
    """No closed form is available for the requested (n, psi)."""


class PsiCase(str, Enum):
    IDENTITY = "identity"
    QUANTUM = "quantum"
    INTERMEDIATE = "intermediate"
    OTHER = "other"


def _check_n(n: int) -> None:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError("n must be >= 1")


def single_mzi_intensities(phi: float) -> IntensityPair:
    c = math.cos(phi)
    return IntensityPair((1 - c) / 2, (1 + c) / 2)


def double_mzi_intensities(phi: float, psi: float) -> IntensityPair:
    c, s = math.cos(phi), math.sin(phi)
    cpsi = math.cos(psi)
    upper = 0.5 * (1 + c * c + s * s * cpsi)
    lower = 0.25 * (1 - cpsi) * (1 - math.cos(2 * phi))
    return IntensityPair(upper, lower)


def n_chain_intensities(n: int, phi: float) -> IntensityPair:
    """Output intensities of the n-chain at psi = +-pi."""
    _check_n(n)
    sc = (-1) ** n * math.cos(n * phi)
    return IntensityPair(0.5 * (1 + sc), 0.5 * (1 - sc))


def n_chain_matrix_closed_form(n: int, phi: float) -> TransferMatrix2:
    _check_n(n)
    s = (-1) ** n * cmath.exp(1j * n * phi)
    pref = 0.5 * (-1) ** (n - 1)
    return TransferMatrix2(
        pref * (1 + s),
        pref * 1j * (1 - s),
        pref * -1j * (1 - s),
        pref * (1 + s),
    )


def intensity_product(n: int, phi: float) -> float:
    """Normalized single-shot intensity product, (1 - cos 2 n phi)/2."""
    _check_n(n)
    return 0.5 * (1 - math.cos(2 * n * phi))


def r_product(a: float, b: float) -> float:
    if a < 0 or b < 0:
        raise ValueError("intensities must be non-negative")
    return 4 * a * b


def phase_from_path_difference(delta_l: float, wavelength: float) -> float:
    if not wavelength > 0:
        raise ValueError(f"wavelength must be positive, got {wavelength!r}")
    return 2 * math.pi * delta_l / wavelength


def _angle_distance(a: float, b: float) -> float:
    return abs(math.remainder(a - b, 2 * math.pi))


def psi_case(psi: float, tol: float = PSI_TOL) -> PsiCase:
    if not tol > 0:
        raise ValueError("tol must be positive")
    if _angle_distance(psi, 0.0) <= tol:
        return PsiCase.IDENTITY
    if _angle_distance(psi, math.pi) <= tol:
        return PsiCase.QUANTUM
    if min(_angle_distance(psi, math.pi / 2), _angle_distance(psi, -math.pi / 2)) <= tol:
        return PsiCase.INTERMEDIATE
    return PsiCase.OTHER


def closed_form_intensities(n: int, phi: float, psi: float, tol: float = PSI_TOL) -> IntensityPair:
    """Dispatch to whichever closed form covers (n, psi).

    n = 1 and n = 2 are covered for every psi. For n > 2 the published
    n-chain formula covers psi = +-pi, and psi = 0 reduces to powers of a
    single MZI (two identical MZIs compose to a global phase). Anything else
    raises :class:`UnsupportedFormulaError`.
    """
    _check_n(n)
    if n == 1:
        return single_mzi_intensities(phi)
    if n == 2:
        return double_mzi_intensities(phi, psi)
    case = psi_case(psi, tol)
    if case is PsiCase.QUANTUM:
        return n_chain_intensities(n, phi)
    if case is PsiCase.IDENTITY:
        return single_mzi_intensities(phi) if n % 2 else IntensityPair(1.0, 0.0)
    raise UnsupportedFormulaError(f"no closed form for n={n} at psi={psi!r}")


# --- printed variants, kept only for errata reporting -----------------------


def printed_double_mzi_lower(phi: float, psi: float) -> float:
    """Lower-port intensity as printed: (1/4)(1 - cos phi)(1 - cos psi)."""
    return 0.25 * (1 - math.cos(phi)) * (1 - math.cos(psi))


def printed_intermediate_lower(phi: float) -> float:
    """Lower-port intensity printed for the psi = +-pi/2 case: (1 - cos phi)/4."""
    return 0.25 * (1 - math.cos(phi))


def printed_double_mzi_matrix(phi: float, psi: float) -> TransferMatrix2:
    """Two-MZI product using the printed 1/16 prefactor on unnormalized factors."""
    e = cmath.exp(1j * phi)
    p = cmath.exp(1j * psi)
    left = TransferMatrix2(1 - e, 1j * (1 + e), 1j * p * (1 + e), -p * (1 - e))
    right = TransferMatrix2(p * (1 - e), 1j * p * (1 + e), 1j * (1 + e), -(1 - e))
    return scale(1 / 16, compose(left, right))
