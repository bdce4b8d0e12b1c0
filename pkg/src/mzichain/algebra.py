"""Two-rail field algebra: 2x2 complex transfer matrices, field vectors, intensities.

Everything here is an immutable value in double precision. Matrices act on
column vectors ``(upper, lower)``; ``compose(A, B)`` is the matrix product
``A @ B``, i.e. ``B`` acts on the field first.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

ComplexAmplitude = complex


def _finite(*values: complex) -> bool:
    return all(cmath.isfinite(v) for v in values)


class FieldPair(NamedTuple):
    upper: complex
    lower: complex

    def total_intensity(self) -> float:
        return _abs2(self.upper) + _abs2(self.lower)


class IntensityPair(NamedTuple):
    """Port intensities in units of the source intensity I0."""

    upper: float
    lower: float

    @property
    def total(self) -> float:
        return self.upper + self.lower


class TransferMatrix2(NamedTuple):
    m00: complex
    m01: complex
    m10: complex
    m11: complex

    @classmethod
    def identity(cls) -> TransferMatrix2:
        return cls(1 + 0j, 0j, 0j, 1 + 0j)

    @classmethod
    def diag(cls, a: complex, b: complex) -> TransferMatrix2:
        return cls(complex(a), 0j, 0j, complex(b))

    @property
    def dagger(self) -> TransferMatrix2:
        c = complex.conjugate
        return TransferMatrix2(c(self.m00), c(self.m10), c(self.m01), c(self.m11))

    def __matmul__(self, other):
        if isinstance(other, TransferMatrix2):
            return compose(self, other)
        if isinstance(other, FieldPair):
            return apply(self, other)
        return NotImplemented


SOURCE = FieldPair(1 + 0j, 0j)


def _abs2(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def compose(left: TransferMatrix2, right: TransferMatrix2) -> TransferMatrix2:
    a00, a01, a10, a11 = left
    b00, b01, b10, b11 = right
    out = TransferMatrix2(
        a00 * b00 + a01 * b10,
        a00 * b01 + a01 * b11,
        a10 * b00 + a11 * b10,
        a10 * b01 + a11 * b11,
    )
    assert _finite(*out), "non-finite transfer matrix entry"
    return out


def apply(m: TransferMatrix2, v: FieldPair) -> FieldPair:
    out = FieldPair(m.m00 * v.upper + m.m01 * v.lower, m.m10 * v.upper + m.m11 * v.lower)
    assert _finite(*out), "non-finite field amplitude"
    return out


def intensities(v: FieldPair) -> IntensityPair:
    return IntensityPair(_abs2(v.upper), _abs2(v.lower))


def scale(c: complex, m: TransferMatrix2) -> TransferMatrix2:
    return TransferMatrix2(c * m.m00, c * m.m01, c * m.m10, c * m.m11)


def max_entry_norm(m: TransferMatrix2) -> float:
    return max(abs(x) for x in m)


def unitarity_error(m: TransferMatrix2) -> float:
    """Largest entry modulus of ``M^dagger M - I``."""
    g = compose(m.dagger, m)
    return max(abs(g.m00 - 1), abs(g.m01), abs(g.m10), abs(g.m11 - 1))


def is_unitary(m: TransferMatrix2, tol: float = 1e-12) -> bool:
    if not tol > 0:
        raise ValueError("tol must be positive")
    return unitarity_error(m) <= tol


def global_phase_error(a: TransferMatrix2, b: TransferMatrix2) -> float:
    """How far ``a^dagger b`` is from a multiple of the identity.

    Zero when ``b = exp(i theta) a`` for unitary ``a``.
    """
    g = compose(a.dagger, b)
    return max(abs(g.m01), abs(g.m10), abs(g.m00 - g.m11))


def equal_up_to_global_phase(a: TransferMatrix2, b: TransferMatrix2, tol: float = 1e-12) -> bool:
    return global_phase_error(a, b) <= tol


def output_intensities(m: TransferMatrix2, v: FieldPair = SOURCE) -> IntensityPair:
    return intensities(apply(m, v))


def phase_factor(theta: float) -> complex:
    if not math.isfinite(theta):
        raise ValueError(f"phase must be finite, got {theta!r}")
    return cmath.exp(1j * theta)
