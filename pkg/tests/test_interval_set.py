from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings

from core._types import EpsBinding, Interval, Scalar
from core.errors import BindingMismatch, MalformedInterval
from core.interval_set import IntervalSet, coverage, set_boolean

from tests.helpers import interval_sets

IMPLICIT = EpsBinding.implicit()
RHO = EpsBinding(Fraction(1, 5))


def pis(*pairs, binding=IMPLICIT):
    return IntervalSet.normalize(
        [Interval(Scalar.of_pi(Fraction(a)), Scalar.of_pi(Fraction(b))) for a, b in pairs], binding
    )


def test_normalize_merges_adjacent_and_overlapping():
    assert pis((0, 1), (1, 2)).intervals == (Interval(Scalar.of_pi(0), Scalar.of_pi(2)),)
    assert pis((0, Fraction(3, 2)), (1, 2)) == pis((0, 2))
    assert pis().is_empty


def test_normalize_rejects_malformed_interval():
    with pytest.raises(MalformedInterval):
        pis((2, 1))
    with pytest.raises(MalformedInterval):
        pis((1, 1))


def test_eps_terms_need_an_explicit_binding():
    with pytest.raises(BindingMismatch):
        IntervalSet.normalize([Interval(Scalar.of_pi(0), Scalar.of_eps(1))], IMPLICIT)


def test_boolean_examples():
    assert pis((0, 2)).difference(pis((1, 2))) == pis((0, 1))
    assert pis((0, 1)).intersect(pis((1, 2))).is_empty
    assert pis((0, 1)) | pis((3, 4)) == pis((0, 1), (3, 4))


def test_boolean_requires_compatible_bindings():
    a = IntervalSet.single(Scalar.of_pi(0), Scalar.of_eps(1), RHO)
    b = IntervalSet.single(Scalar.of_pi(0), Scalar.of_eps(1), EpsBinding(Fraction(1, 3)))
    with pytest.raises(BindingMismatch):
        set_boolean("union", a, b)
    with pytest.raises(ValueError):
        set_boolean("xor", a, a)


def test_window_minus_first_hole_level():
    # ventana de n=2 menos 16·X1; 16·X1 = X0 + 4π empieza justo en el borde izquierdo
    e = Scalar.of_eps(1)
    window = IntervalSet.single(
        Scalar.of_pi(Fraction(25, 6)) + e / 32, Scalar.of_pi(Fraction(13, 3)), RHO
    )
    hole = IntervalSet.single(
        Scalar.of_pi(Fraction(2003, 7680)), Scalar.of_pi(Fraction(2026, 7680)), RHO
    ).scale(16)
    rest = window.difference(hole)
    assert rest == IntervalSet.single(
        Scalar.of_pi(Fraction(2026, 480)), Scalar.of_pi(Fraction(13, 3)), RHO
    )


def test_translate_2pi():
    assert pis((-2, -1)).translate_2pi(1) == pis((0, 1))
    a = pis((1, 3))
    assert a.translate_2pi(0) == a
    e = Scalar.of_eps(1)
    s2 = IntervalSet.single(Scalar.of_pi(Fraction(-1, 3)) + e / 16, Scalar.of_pi(Fraction(-1, 6)), RHO)
    expected = IntervalSet.single(
        Scalar.of_pi(Fraction(11, 3)) + e / 16, Scalar.of_pi(Fraction(23, 6)), RHO
    )
    assert s2.translate_2pi(2) == expected


def test_dilate_pow2():
    assert pis((1, 2)).dilate_pow2(1) == pis((2, 4))
    assert pis((-2, -1)).dilate_pow2(-1) == pis((-1, Fraction(-1, 2)))
    z0 = IntervalSet.single(
        Scalar.of_pi(Fraction(7, 24)), Scalar.of_pi(Fraction(7, 24)) + Scalar.of_eps(Fraction(1, 16)), RHO
    )
    assert z0.dilate_pow2(4) == IntervalSet.single(
        Scalar.of_pi(Fraction(14, 3)), Scalar.of_pi(Fraction(14, 3)) + Scalar.of_eps(1), RHO
    )
    a = pis((1, 3))
    assert a.dilate_pow2(0) == a


def test_scale_rejects_non_positive_factor():
    with pytest.raises(ValueError):
        pis((1, 2)).scale(-1)


def test_measure_and_contains(shannon_set, journe_set):
    assert shannon_set.measure() == Scalar.of_pi(2)
    assert journe_set.measure() == Scalar.of_pi(2)
    assert shannon_set.contains(Scalar.of_pi(1))
    assert not shannon_set.contains(Scalar.of_pi(2))
    assert shannon_set.contains(Scalar.of_pi(Fraction(3, 2)))
    assert not shannon_set.contains(Scalar.of_pi(0))


def test_signed_parts_and_distance_to_zero(journe_set):
    assert journe_set.positive_part() == pis((Fraction(4, 7), 1), (4, Fraction(32, 7)))
    assert journe_set.negative_part() == pis((Fraction(-32, 7), -4), (-1, Fraction(-4, 7)))
    assert journe_set.dist_from_zero() == Scalar.of_pi(Fraction(4, 7))
    assert pis((0, 1)).dist_from_zero() is None
    assert pis((-1, 0)).dist_from_zero() is None


def test_equality_compares_values_under_binding():
    a = IntervalSet.single(Scalar.of_pi(0), Scalar.of_eps(5), RHO)
    b = IntervalSet.single(Scalar.of_pi(0), Scalar.of_pi(1), IMPLICIT)
    assert a == b


def test_coverage_counts_multiplicity():
    pieces = [
        Interval(Scalar.of_pi(0), Scalar.of_pi(1)),
        Interval(Scalar.of_pi(Fraction(1, 2)), Scalar.of_pi(3)),
    ]
    segments = coverage(pieces, Interval(Scalar.of_pi(0), Scalar.of_pi(2)), IMPLICIT)
    assert [(seg.lo.pi, seg.hi.pi, n) for seg, n in segments] == [
        (0, Fraction(1, 2), 1),
        (Fraction(1, 2), 1, 2),
        (1, 2, 1),
    ]
    empty = coverage([], Interval(Scalar.of_pi(0), Scalar.of_pi(2)), IMPLICIT)
    assert [(n) for _, n in empty] == [0]


def _grid_points():
    return [Scalar.of_pi(Fraction(k, 16)) + Scalar.of_pi(Fraction(1, 32)) for k in range(-100, 100)]


@given(interval_sets(), interval_sets())
@hsettings(max_examples=150, deadline=None)
def test_boolean_ops_match_pointwise_oracle(a, b):
    union, inter, diff = a | b, a & b, a - b
    for x in _grid_points() + [iv.lo for iv in a] + [iv.lo for iv in b]:
        in_a, in_b = a.contains(x), b.contains(x)
        assert union.contains(x) == (in_a or in_b)
        assert inter.contains(x) == (in_a and in_b)
        assert diff.contains(x) == (in_a and not in_b)


@given(interval_sets(), interval_sets())
@hsettings(max_examples=150, deadline=None)
def test_inclusion_exclusion(a, b):
    assert (a | b).measure() + (a & b).measure() == a.measure() + b.measure()


@given(interval_sets())
@hsettings(max_examples=100, deadline=None)
def test_normalize_is_idempotent_and_canonical(a):
    again = IntervalSet.normalize(a.intervals, a.binding)
    assert again.intervals == a.intervals
    for left, right in zip(a.intervals, a.intervals[1:]):
        assert left.hi.pi < right.lo.pi
