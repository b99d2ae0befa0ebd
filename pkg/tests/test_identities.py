from fractions import Fraction

import pytest

from core.construction import Params
from core.identities import verify_construction_identities

from tests.helpers import half_delta


@pytest.mark.parametrize("n", [2, 3, 4])
def test_all_identities_hold(n):
    report = verify_construction_identities(half_delta(n), 6)
    assert report.all_passed, [c.name for c in report.failures()]
    kinds = {c.kind for c in report.checks}
    assert kinds == {"integrality", "translation", "dilation", "self_similar", "fact"}
    self_similar = [c for c in report.checks if c.kind == "self_similar" and not c.informational]
    assert len(self_similar) == 6


def test_even_translation_chain_example(params_2):
    report = verify_construction_identities(params_2, 3)
    check = report.by_name("translation: S3 ∪ (S2 + c) ∪ S4")
    assert check.passed and check.discrepancy is None
    assert report.by_name("translation: full fold").passed


def test_printed_recursion_constant_is_informational(params_2):
    report = verify_construction_identities(params_2, 3)
    printed = report.by_name("self-similar: X0 + 2(2^{n+2}−1)π/3 = 2^{n+2}·X1")
    assert printed.informational and not printed.passed
    assert report.all_passed


def test_odd_case_reports_both_readings():
    report = verify_construction_identities(half_delta(3), 3)
    readings = [
        c for c in report.checks if c.name == "translation: S3 ∪ (S1 + d) ∪ S4 ∪ (S2 + c) ∪ S5"
    ]
    assert [(c.reading, c.passed, c.informational) for c in readings] == [
        ("printed", False, True),
        ("corrected", True, False),
    ]
    assert readings[0].discrepancy is not None
    assert report.all_passed


def test_n1_dilation_of_negative_pieces():
    report = verify_construction_identities(Params.from_ratio(1, Fraction(1, 3)), 3)
    assert report.by_name("dilation: S1 ∪ 2^{n+2}·S2").passed


@pytest.mark.parametrize("ratio", [Fraction(1, 3), Fraction(4, 21)])
def test_n1_construction_is_degenerate(ratio):
    report = verify_construction_identities(Params.from_ratio(1, ratio), 6)
    assert not report.all_passed
    failed = {c.name for c in report.failures()}
    assert "fact (i): X_0, Y_0, Z_0 ⊆ [π/6 + ε/2^{n+3}, π/3]" in failed
    assert "fact (iii): X_0 < Y_0 < Z_0" in failed
    assert "dilation: 2^{n+2}X0 ∪ S3 ∪ 2^{n+2}Y0 ∪ S4 ∪ 2^{n+2}Z0 ∪ S5" in failed
    assert "translation: V_J ∪ ⋃_{j<J} (P_j + c)" in failed


def test_depth_must_be_positive(params_2):
    with pytest.raises(ValueError):
        verify_construction_identities(params_2, 0)


def test_report_json(params_2):
    data = verify_construction_identities(params_2, 2).to_json()
    assert data["n"] == 2 and data["eps_ratio"] == "1/5" and data["all_passed"] is True
    assert all({"name", "kind", "passed"} <= set(check) for check in data["checks"])
