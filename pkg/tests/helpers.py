"""
Utilidades compartidas por los tests: muestreo racional y estrategias de hypothesis.
"""

from __future__ import annotations
from fractions import Fraction
import math
import random
from typing import List

from hypothesis import strategies as st

from core._types import EpsBinding, Interval, Scalar
from core.construction import Params, delta_bound
from core.interval_set import IntervalSet

# primo: ningún extremo de una construcción ni de la órbita de p* tiene este denominador
SAMPLE_DENOMINATOR = 10007


def sample_points(count: int, lo: Fraction, hi: Fraction, seed: int = 0) -> List[Scalar]:
    """`count` múltiplos racionales de π en [lo, hi) con denominador exacto 10007."""
    rng = random.Random(seed)
    a = math.ceil(Fraction(lo) * SAMPLE_DENOMINATOR)
    b = math.floor(Fraction(hi) * SAMPLE_DENOMINATOR)
    points: List[Scalar] = []
    while len(points) < count:
        num = rng.randrange(a, b)
        if num % SAMPLE_DENOMINATOR == 0:
            continue
        points.append(Scalar.of_pi(Fraction(num, SAMPLE_DENOMINATOR)))
    return points


small_rationals = st.fractions(min_value=-8, max_value=8, max_denominator=12)

scalars = st.builds(Scalar, small_rationals, st.fractions(min_value=-2, max_value=2, max_denominator=6))


@st.composite
def interval_sets(draw, binding: EpsBinding = EpsBinding.implicit(), max_size: int = 5):
    """Conjuntos sin ε con extremos en una rejilla fina de múltiplos de π."""
    grid = st.integers(min_value=-48, max_value=48)
    raw = []
    for _ in range(draw(st.integers(min_value=0, max_value=max_size))):
        a, b = draw(grid), draw(grid)
        if a == b:
            continue
        lo, hi = sorted((a, b))
        raw.append(Interval(Scalar.of_pi(Fraction(lo, 8)), Scalar.of_pi(Fraction(hi, 8))))
    return IntervalSet.normalize(raw, binding)


def half_delta(n: int) -> Params:
    """Params(n, δ(n)/2)."""
    return Params.from_ratio(n, delta_bound(n).pi / 2)
