from fractions import Fraction

from hypothesis import given, settings as hsettings, strategies as st

from core._types import EpsBinding, Interval, Scalar, ZERO
from core.interval_set import IntervalSet
from core.partition import FailureReason, Sign, fold_dyadic, fold_mod_2pi, wavelet_verdict

from tests.helpers import interval_sets

IMPLICIT = EpsBinding.implicit()


def pis(*pairs):
    return IntervalSet.normalize(
        [Interval(Scalar.of_pi(Fraction(a)), Scalar.of_pi(Fraction(b))) for a, b in pairs], IMPLICIT
    )


def assert_exact(report):
    assert report.is_exact
    assert report.gap.is_empty and report.overlap.is_empty
    assert report.gap_measure == ZERO and report.overlap_measure == ZERO


def test_shannon_and_journe_are_wavelet_sets(shannon_set, journe_set):
    for a in (shannon_set, journe_set):
        verdict = wavelet_verdict(a)
        assert verdict.is_wavelet_set
        for report in verdict.reports():
            assert_exact(report)


def test_journe_translation_fold_covers_cell(journe_set):
    report = fold_mod_2pi(journe_set)
    assert report.cover == pis((0, 2))
    assert report.pieces_measure == Scalar.of_pi(2)


def test_translation_gap():
    report = fold_mod_2pi(pis((0, 1)))
    assert report.gap == pis((1, 2))
    assert report.gap_measure == Scalar.of_pi(1)
    assert not report.is_exact


def test_dyadic_overlap():
    report = fold_dyadic(pis((1, 3)), Sign.POSITIVE)
    assert report.overlap == pis((1, Fraction(3, 2)))
    assert report.overlap_measure == Scalar.of_pi(Fraction(1, 2))
    # [π, 2π) ya cubre la celda: no queda hueco
    assert report.gap.is_empty
    assert report.cover == pis((1, 2))
    assert report.excess_mass == Scalar.of_pi(Fraction(1, 2))


def test_journe_positive_dilation_pieces(journe_set):
    report = fold_dyadic(journe_set, Sign.POSITIVE)
    assert_exact(report)
    assert report.cover == pis((1, 2))


def test_negative_fold_keeps_half_open_pieces():
    # [−4π, −π) = [−4π, −2π) ∪ [−2π, −π): ambos caen sobre [−2π, −π)
    report = fold_dyadic(pis((-4, -1)), Sign.NEGATIVE)
    assert report.overlap == pis((-2, -1))
    assert report.excess_mass == Scalar.of_pi(1)


def test_touching_zero_is_reported_not_raised():
    verdict = wavelet_verdict(pis((0, 2)))
    assert not verdict.is_wavelet_set
    assert verdict.dilation_pos.failure_reason is FailureReason.ACCUMULATION_AT_ZERO
    assert verdict.dilation_neg.failure_reason is None
    assert verdict.dilation_neg.gap == pis((-2, -1))

    left = wavelet_verdict(pis((-1, 0)))
    assert left.dilation_neg.failure_reason is FailureReason.ACCUMULATION_AT_ZERO


def test_verdict_json_shape(shannon_set):
    data = wavelet_verdict(shannon_set).to_json()
    assert data["is_wavelet_set"] is True
    assert data["translation"]["gap_measure"]["exact"] == {"pi": "0/1", "eps": "0/1"}
    assert data["dilation_neg"]["failure_reason"] is None


@given(interval_sets(), st.integers(min_value=-3, max_value=3))
@hsettings(max_examples=100, deadline=None)
def test_translation_fold_is_shift_invariant(a, k):
    base, moved = fold_mod_2pi(a), fold_mod_2pi(a.translate_2pi(k))
    assert base.cover == moved.cover
    assert base.overlap == moved.overlap
    assert base.excess_mass == moved.excess_mass


@given(interval_sets(), st.integers(min_value=-3, max_value=3))
@hsettings(max_examples=100, deadline=None)
def test_dyadic_fold_is_dilation_invariant(a, m):
    for sign in Sign:
        base, moved = fold_dyadic(a, sign), fold_dyadic(a.dilate_pow2(m), sign)
        assert base.failure_reason == moved.failure_reason
        assert base.cover == moved.cover
        assert base.overlap == moved.overlap


@given(interval_sets())
@hsettings(max_examples=100, deadline=None)
def test_folding_preserves_mass(a):
    reports = [fold_mod_2pi(a)]
    for sign in Sign:
        report = fold_dyadic(a, sign)
        if report.failure_reason is None:
            reports.append(report)
    for report in reports:
        assert report.pieces_measure == report.cover.measure() + report.excess_mass
    assert reports[0].pieces_measure == a.measure()


@given(interval_sets())
@hsettings(max_examples=150, deadline=None)
def test_wavelet_sets_have_measure_two_pi(a):
    if wavelet_verdict(a).is_wavelet_set:
        assert a.measure() == Scalar.of_pi(2)
    for b in (
        pis((-2, -1), (1, 2)),
        pis((-3, Fraction(-3, 2)), (Fraction(1, 2), 1)),
        pis((-1, Fraction(-1, 2)), (Fraction(3, 2), 3)),
    ):
        assert wavelet_verdict(b).is_wavelet_set
        assert b.measure() == Scalar.of_pi(2)
