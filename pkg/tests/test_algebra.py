import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mzichain.algebra import (
    FieldPair,
    TransferMatrix2,
    apply,
    compose,
    intensities,
    is_unitary,
    max_entry_norm,
    scale,
    unitarity_error,
)
from mzichain.elements import beam_splitter, chain, phase_shifter

I = TransferMatrix2.identity()
S = 1 / math.sqrt(2)

angles = st.floats(-10, 10, allow_nan=False)
amps = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)


@st.composite
def unitaries(draw):
    # U = e^{i g} [[a, -conj b], [b, conj a]], |a|^2 + |b|^2 = 1
    g, t, u, w = (draw(angles) for _ in range(4))
    a = math.cos(t) * cmath.exp(1j * u)
    b = math.sin(t) * cmath.exp(1j * w)
    p = cmath.exp(1j * g)
    return TransferMatrix2(p * a, -p * b.conjugate(), p * b, p * a.conjugate())


fields = st.builds(FieldPair, amps, amps)


def close(a, b, tol):
    return max(abs(x - y) for x, y in zip(a, b)) <= tol


def test_compose_identity():
    assert compose(I, I) == I


def test_compose_bs_pair_crosses_field():
    out = apply(compose(beam_splitter(), beam_splitter()), FieldPair(1, 0))
    assert close(out, (0, 1j), 1e-15)


def test_compose_diagonals():
    phi, psi = 0.7, -1.9
    m = compose(phase_shifter("lower", phi), phase_shifter("upper", psi))
    assert close(m, (cmath.exp(1j * psi), 0, 0, cmath.exp(1j * phi)), 1e-15)


@pytest.mark.parametrize(
    "m, v, expected",
    [
        (I, (1, 0), (1, 0)),
        (TransferMatrix2.diag(cmath.exp(0.4j), 1), (1, 0), (cmath.exp(0.4j), 0)),
        (beam_splitter(), (1, 0), (S, 1j * S)),
    ],
)
def test_apply(m, v, expected):
    assert close(apply(m, FieldPair(*v)), expected, 1e-15)


@pytest.mark.parametrize(
    "v, expected",
    [
        ((1, 0), (1, 0)),
        ((S, 1j * S), (0.5, 0.5)),
        (((1 + 1j) / 2, (1 - 1j) / 2), (0.5, 0.5)),
    ],
)
def test_intensities(v, expected):
    assert close(intensities(FieldPair(*v)), expected, 1e-15)


def test_is_unitary_examples():
    assert is_unitary(beam_splitter(), 1e-12)
    assert not is_unitary(TransferMatrix2.diag(2, 1), 1e-12)
    assert is_unitary(chain(5, 0.7, 2.1), 1e-12)


def test_is_unitary_rejects_bad_tol():
    with pytest.raises(ValueError):
        is_unitary(I, 0)


def test_matmul_operator_matches_functions():
    a, b = beam_splitter(), phase_shifter("upper", 0.3)
    v = FieldPair(0.2 + 0.1j, -0.5j)
    assert a @ b == compose(a, b)
    assert a @ v == apply(a, v)


def test_compose_matches_numpy():
    rng = np.random.default_rng(7)
    a = TransferMatrix2(*rng.normal(size=4) + 1j * rng.normal(size=4))
    b = TransferMatrix2(*rng.normal(size=4) + 1j * rng.normal(size=4))
    expected = (np.array(a).reshape(2, 2) @ np.array(b).reshape(2, 2)).ravel()
    assert np.allclose(np.array(compose(a, b)), expected, rtol=0, atol=1e-14)


@given(unitaries(), unitaries(), unitaries())
def test_associativity(a, b, c):
    left = compose(a, compose(b, c))
    right = compose(compose(a, b), c)
    assert close(left, right, 1e-14)


@given(unitaries(), unitaries())
def test_unitarity_closure(a, b):
    assert is_unitary(a, 1e-13) and is_unitary(b, 1e-13)
    assert is_unitary(compose(a, b), 1e-12)


@given(unitaries(), fields)
def test_energy_conservation(m, v):
    before = v.total_intensity()
    after = apply(m, v).total_intensity()
    assert abs(after - before) <= 1e-12


@given(unitaries(), st.floats(-math.pi, math.pi), st.complex_numbers(max_magnitude=1, allow_nan=False))
def test_global_phase_invariance(m, theta, z):
    v = FieldPair(z, (1 - abs(z) ** 2) ** 0.5)
    shifted = scale(cmath.exp(1j * theta), m)
    assert close(intensities(apply(shifted, v)), intensities(apply(m, v)), 1e-14)


@given(unitaries(), unitaries())
def test_contract_apply_compose(a, b):
    v = FieldPair(0.6, 0.8j)
    assert close(apply(compose(a, b), v), apply(a, apply(b, v)), 1e-14)


def test_non_finite_entries_are_caught():
    bad = TransferMatrix2(float("nan"), 0, 0, 1)
    with pytest.raises(AssertionError):
        compose(bad, I)


def test_unitarity_error_of_scaled_identity():
    assert unitarity_error(scale(2, I)) == pytest.approx(3.0)
    assert max_entry_norm(scale(2, I)) == 2
