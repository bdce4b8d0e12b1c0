import json
import math

import pytest

from mzichain.oracle import (
    FORMULAS,
    PROBE,
    OracleVerificationError,
    build_report,
    verify_oracle,
)

PI = math.pi


@pytest.fixture(scope="module")
def default_report():
    return verify_oracle()


def test_default_grid_passes(default_report):
    assert default_report.passed
    assert default_report.max_abs_deviation <= 1e-12
    assert default_report.phi_points == 721 and len(default_report.psi_values) == 9
    assert set(default_report.checks) == set(FORMULAS)
    assert all(c.samples for c in default_report.checks.values())


def test_printed_lower_port_flagged_at_probe(default_report):
    flags = {(f.formula, f.note): f for f in default_report.printed_formula_flags}
    probe = flags[("double-lower-printed", "probe")]
    assert (probe.phi, probe.psi) == PROBE
    assert probe.printed_value == pytest.approx(0.25, abs=1e-15)
    assert probe.oracle_value == pytest.approx(0.5, abs=1e-12)

    iii = flags[("intermediate-lower-printed", "probe")]
    assert iii.printed_value == pytest.approx(0.25, abs=1e-15)
    assert iii.oracle_value == pytest.approx(0.5, abs=1e-12)


def test_grid_argmax_flags_exceed_probe(default_report):
    for f in default_report.printed_formula_flags:
        if f.note == "grid argmax":
            assert f.deviation >= 0.25 - 1e-12


def test_prefactor_flag(default_report):
    (f,) = [f for f in default_report.printed_formula_flags if f.formula == "double-prefactor"]
    assert f.printed_value == pytest.approx(1 / 16)
    assert f.oracle_value == pytest.approx(1.0, abs=1e-12)


def test_render_and_dict(default_report):
    text = default_report.render()
    assert "result: PASS" in text
    assert "double-lower-printed" in text
    assert "FAIL" not in text.split("errata")[0]
    d = json.loads(json.dumps(default_report.to_dict()))
    assert d["passed"] is True
    assert len(d["printed_formula_flags"]) == 5


def test_single_mzi_grid_only():
    report = verify_oracle(max_n=1)
    sampled = {k for k, c in report.checks.items() if c.samples}
    assert "double-upper" not in sampled and "single-mzi" in sampled
    assert all(c.argmax[0] == 1 for c in report.checks.values() if c.samples)
    assert report.printed_formula_flags == []


def test_impossible_tolerance_raises_with_location():
    with pytest.raises(OracleVerificationError) as info:
        verify_oracle(max_n=2, tol=1e-300)
    report = info.value.report
    assert not report.passed
    assert report.argmax is not None
    assert "at (n=" in str(info.value)


def test_build_report_does_not_raise():
    report = build_report(max_n=2, tol=1e-300, phi_points=11)
    assert not report.passed


@pytest.mark.parametrize("kwargs", [{"max_n": 0}, {"max_n": 2.5}, {"tol": 0.0}, {"tol": -1.0}])
def test_argument_validation(kwargs):
    with pytest.raises(ValueError):
        build_report(**kwargs)
