import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import reference
from mzichain.algebra import SOURCE, TransferMatrix2, apply, compose, is_unitary, output_intensities, scale
from mzichain.elements import (
    Arm,
    BeamSplitter,
    ChainSpec,
    MziBlock,
    PhaseShifter,
    beam_splitter,
    cascade,
    chain,
    coupled_chain,
    coupler_arm,
    mzi,
    phase_shifter,
)

S = 1 / math.sqrt(2)
phases = st.floats(-4 * math.pi, 4 * math.pi, allow_nan=False)


def close(a, b, tol):
    return max(abs(x - y) for x, y in zip(a, b)) <= tol


def test_beam_splitter_column():
    assert close(apply(beam_splitter(), SOURCE), (S, 1j * S), 1e-16)
    assert is_unitary(beam_splitter(), 1e-12)
    assert close(compose(beam_splitter(), beam_splitter()), (0, 1j, 1j, 0), 1e-15)


def test_phase_shifter_examples():
    assert phase_shifter("upper", 0) == TransferMatrix2.identity()
    assert close(phase_shifter(Arm.LOWER, math.pi), (1, 0, 0, -1), 1e-15)
    assert close(phase_shifter("upper", math.pi), scale(-1, phase_shifter("lower", math.pi)), 1e-15)


def test_phase_shifter_rejects_bad_arm_and_phase():
    with pytest.raises(ValueError):
        phase_shifter("middle", 0.1)
    with pytest.raises(ValueError):
        phase_shifter("upper", math.inf)


@pytest.mark.parametrize("phi", [0.0, 0.3, math.pi / 3, 2.0, -1.1, math.pi])
def test_mzi_closed_matrix(phi):
    e = cmath.exp(1j * phi)
    expected = (0.5 * (1 - e), 0.5j * (1 + e), 0.5j * (1 + e), -0.5 * (1 - e))
    assert close(mzi(phi), expected, 1e-15)


def test_mzi_examples():
    assert close(apply(mzi(0), SOURCE), (0, 1j), 1e-15)
    assert close(output_intensities(mzi(math.pi)), (1, 0), 1e-15)
    # (1 - cos(pi/3))/2 = 0.25, confirmed by the numpy product
    assert close(output_intensities(mzi(math.pi / 3)), (0.25, 0.75), 1e-15)
    assert close(reference.intensities(reference.mzi(math.pi / 3)), (0.25, 0.75), 1e-15)


def test_coupler_policy_alternates():
    assert [coupler_arm(k) for k in range(1, 5)] == [Arm.UPPER, Arm.LOWER, Arm.UPPER, Arm.LOWER]


def test_chain_n1_without_trailing_is_mzi():
    assert chain(1, 0.8, 2.5, include_trailing_coupler=False) == mzi(0.8)


@pytest.mark.parametrize("phi", np.linspace(0, 2 * math.pi, 9))
def test_chain_n2_psi0_is_fixed(phi):
    assert close(output_intensities(chain(2, phi, 0.0)), (1, 0), 1e-12)


def test_chain_n2_quarter_phase_at_psi_pi():
    expected = reference.intensities(reference.chain(2, math.pi / 4, math.pi))
    assert close(expected, (0.5, 0.5), 1e-15)
    assert close(output_intensities(chain(2, math.pi / 4, math.pi)), (0.5, 0.5), 1e-15)


def test_chain_n3_phi_pi():
    assert close(output_intensities(chain(3, math.pi, math.pi)), (1, 0), 1e-12)


def test_chain_n2_matches_double_factorization():
    # D_2(lower) . MZI . D_1(upper) . MZI
    phi, psi = 0.9, 1.3
    expected = compose(phase_shifter("lower", psi),
                       compose(mzi(phi), compose(phase_shifter("upper", psi), mzi(phi))))
    assert chain(2, phi, psi) == expected


def test_chain_spec_validation():
    with pytest.raises(ValueError, match="n must be >= 1"):
        ChainSpec(0, 0.1, 0.2)
    with pytest.raises(ValueError):
        ChainSpec(2, math.nan, 0.2)
    with pytest.raises(ValueError):
        ChainSpec(2, 0.1, 0.2, coupler_policy="same-arm")


def test_element_values_and_cascade():
    els = [MziBlock(0.4), PhaseShifter("upper", 1.1), MziBlock(0.4), PhaseShifter("lower", 1.1)]
    assert cascade(els) == chain(2, 0.4, 1.1)
    assert cascade([BeamSplitter(), BeamSplitter()]) == compose(beam_splitter(), beam_splitter())
    with pytest.raises(ValueError):
        MziBlock(math.inf)


@given(st.integers(1, 10), phases, phases)
def test_chain_matches_numpy_reference(n, phi, psi):
    ours = reference.as_array(chain(n, phi, psi))
    assert np.abs(ours - reference.chain(n, phi, psi)).max() <= 1e-13


@given(st.integers(1, 12), phases, phases)
def test_constructors_are_unitary(n, phi, psi):
    for m in (beam_splitter(), phase_shifter("upper", psi), phase_shifter("lower", phi), mzi(phi),
              chain(n, phi, psi)):
        assert is_unitary(m, 1e-12)


@given(phases)
def test_double_mzi_is_global_phase(phi):
    m = chain(2, phi, 0.0, include_trailing_coupler=False)
    assert m == compose(mzi(phi), mzi(phi))
    assert close(m, scale(-cmath.exp(1j * phi), TransferMatrix2.identity()), 1e-13)
    assert close(output_intensities(m), (1, 0), 1e-12)


@given(st.integers(1, 12), phases, phases)
def test_trailing_coupler_irrelevant(n, phi, psi):
    a = output_intensities(chain(n, phi, psi, include_trailing_coupler=True))
    b = output_intensities(chain(n, phi, psi, include_trailing_coupler=False))
    assert close(a, b, 1e-14)


@given(st.integers(1, 12), phases, phases)
def test_psi_parity(n, phi, psi):
    assert close(output_intensities(chain(n, phi, psi)), output_intensities(chain(n, phi, -psi)), 1e-12)


def test_coupled_chain_accepts_spec():
    spec = ChainSpec(3, 0.2, 0.5, include_trailing_coupler=False)
    assert coupled_chain(spec) == chain(3, 0.2, 0.5, include_trailing_coupler=False)
