"""
Función de dimensión de una wavelet MSF:

    D(ξ) = Σ_{j≥1} Σ_{k∈ℤ} χ_K(2^j(ξ + 2kπ))

Para conjuntos indicadores la suma es un conteo exacto de pares (j, k). Aquí se evalúa
punto a punto contra cualquier SetOracle y como perfil constante a trozos sobre [−π, π).
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import logging
import math
from typing import Iterator, List, Optional, Tuple

from utils.math_utils import floor_log2
from ._types import EpsBinding, Interval, Scalar, ZERO
from .construction import Params, WaveletSetBuilder, witness_interval, witness_pairs
from .errors import AccumulationAtZero, SupportOutOfRange, ZeroInput
from .interval_set import IntervalSet, coverage
from .oracle import IntervalSetOracle, SetOracle

logger = logging.getLogger(__name__)


def _pow2(m: int) -> Fraction:
    return Fraction(2) ** m


def _radius(o: SetOracle) -> Fraction:
    key = o.binding.key
    return max(abs(key(o.support_lo)), abs(key(o.support_hi)))


def folded_tail(o: SetOracle, xi: Scalar) -> int:
    """#{j ≥ 1 : 2^j ξ ∈ K}."""
    t = abs(o.binding.key(xi))
    if t == 0:
        return 0
    big = _radius(o)
    count = 0
    j = 1
    while _pow2(j) * t <= big:
        if o.contains(xi.scale(_pow2(j))):
            count += 1
        j += 1
    return count


def _distance_to_even(t: Fraction) -> Fraction:
    """min |t + 2k| sobre los k con t + 2k != 0."""
    u = t - 2 * math.floor(t / 2)
    if u == 0:
        return Fraction(2)
    return min(u, 2 - u)


def dimension_pairs(o: SetOracle, xi: Scalar) -> List[Tuple[int, int]]:
    """Pares (j, k), j ≥ 1, con 2^j(ξ + 2kπ) ∈ K, en orden lexicográfico."""
    key = o.binding.key
    t = key(xi)
    lo, hi = key(o.support_lo), key(o.support_hi)
    big = _radius(o)
    d_min = _distance_to_even(t)

    pairs: List[Tuple[int, int]] = []
    j = 1
    while _pow2(j) * d_min <= big:
        scale = _pow2(j)
        k_lo = math.ceil((lo / scale - t) / 2)
        k_hi = math.floor((hi / scale - t) / 2)
        for k in range(k_lo, k_hi + 1):
            point = (xi + Scalar.of_pi(2 * k)).scale(scale)
            if key(point) != 0 and o.contains(point):
                pairs.append((j, k))
        j += 1
    return pairs


def dimension_at(o: SetOracle, xi: Scalar) -> int:
    return len(dimension_pairs(o, xi))


def sum_rule_at(o: SetOracle, xi: Scalar) -> int:
    """#{j ∈ ℤ : 2^j ξ ∈ K}; vale 1 en casi todo punto si K es un conjunto wavelet."""
    key = o.binding.key
    t = abs(key(xi))
    if t == 0:
        raise ZeroInput("La regla de la suma no está definida en ξ = 0")
    j_lo = floor_log2(key(o.dist0) / t)
    j_hi = floor_log2(_radius(o) / t) + 1
    return sum(1 for j in range(j_lo, j_hi + 1) if o.contains(xi.scale(_pow2(j))))


# --- Perfiles ---


@dataclass(frozen=True)
class ProfilePiece:
    interval: Interval
    value: int


@dataclass(frozen=True)
class ProfileStats:
    max: int
    integral: Scalar


@dataclass(frozen=True)
class Profile:
    """
    D sobre [−π, π). Los trozos explícitos cubren [−π, −r) ∪ [r, π); cerca del 0 el perfil
    es diádicamente autosemejante, así que basta guardar las celdas [r/2, r) y [−r, −r/2),
    que se repiten bajo ξ ↦ ξ/2, y el valor en 0.
    """

    pieces: Tuple[ProfilePiece, ...]
    inner_radius: Scalar
    cell_pos: Tuple[ProfilePiece, ...]
    cell_neg: Tuple[ProfilePiece, ...]
    origin_value: int
    binding: EpsBinding

    def _all_pieces(self) -> Iterator[ProfilePiece]:
        yield from self.pieces
        yield from self.cell_pos
        yield from self.cell_neg

    def max_value(self) -> int:
        return max((piece.value for piece in self._all_pieces()), default=0)

    def integral(self) -> Scalar:
        total = ZERO
        for piece in self.pieces:
            total = total + piece.interval.length().scale(piece.value)
        # Σ_{m≥0} 2^{−m} = 2 por cada celda
        for piece in self.cell_pos + self.cell_neg:
            total = total + piece.interval.length().scale(2 * piece.value)
        return total

    def is_constant(self) -> bool:
        return len({piece.value for piece in self._all_pieces()}) <= 1

    def value_at(self, xi: Scalar) -> int:
        key = self.binding.key
        # reducción a [−π, π)
        shift = math.floor((key(xi) + 1) / 2)
        x = xi - Scalar.of_pi(2 * shift)
        t = key(x)
        r = key(self.inner_radius)
        if t == 0:
            return self.origin_value
        if abs(t) < r:
            m = floor_log2(r / abs(t))
            if t > 0 and _pow2(m) * t == r:
                m -= 1
            x = x.scale(_pow2(m))
            cell = self.cell_pos if t > 0 else self.cell_neg
        else:
            cell = self.pieces
        for piece in cell:
            if piece.interval.contains(x, self.binding):
                return piece.value
        return 0

    def expanded(self, levels: int) -> List[Tuple[str, Interval, int]]:
        """Trozos explícitos más `levels` copias de cada celda, ordenados por lo."""
        key = self.binding.key
        rows: List[Tuple[str, Interval, int]] = [
            ("outer", piece.interval, piece.value) for piece in self.pieces
        ]
        for m in range(levels):
            factor = _pow2(-m)
            for piece in self.cell_pos + self.cell_neg:
                rows.append((f"dyadic:{m}", piece.interval.scale(factor), piece.value))
        rows.sort(key=lambda row: key(row[1].lo))
        return rows


def _terms(a: IntervalSet, j: int, skip_zero_shift: bool = False) -> Iterator[Interval]:
    """Intervalos 2^{−j}A − 2k que pueden cortar [−π, π)."""
    key = a.binding.key
    factor = _pow2(-j)
    for iv in a:
        s = iv.scale(factor)
        k_lo = math.ceil((key(s.lo) - 1) / 2)
        k_hi = math.floor((key(s.hi) + 1) / 2)
        for k in range(k_lo, k_hi + 1):
            if skip_zero_shift and k == 0:
                continue
            yield s.shift(Scalar.of_pi(-2 * k))


def _inner_radius(a: IntervalSet) -> Fraction:
    key = a.binding.key
    r = min(Fraction(1), key(a.dist_from_zero()))
    big = abs(key(a.radius()))
    j_top = floor_log2(big) if big >= 1 else 0
    # los términos con k != 0 son constantes en (−r, 0) y en [0, r)
    for j in range(1, j_top + 1):
        for iv in _terms(a, j, skip_zero_shift=True):
            for end in iv.as_tuple():
                t = abs(key(end))
                if 0 < t < r:
                    r = t
    return r


def _pieces(terms: List[Interval], lo: Scalar, hi: Scalar, binding: EpsBinding) -> Tuple[ProfilePiece, ...]:
    return tuple(
        ProfilePiece(iv, n) for iv, n in coverage(terms, Interval(lo, hi), binding)
    )


def dimension_profile(a: IntervalSet) -> Profile:
    binding = a.binding
    key = binding.key
    if a.is_empty:
        r = Fraction(1)
        terms: List[Interval] = []
        origin = 0
    else:
        if a.dist_from_zero() is None:
            raise AccumulationAtZero("El conjunto toca el 0: el perfil no es finito")
        r = _inner_radius(a)
        big = abs(key(a.radius()))
        j_max = floor_log2(2 * big / r)
        terms = [iv for j in range(1, j_max + 1) for iv in _terms(a, j)]
        origin = dimension_at(IntervalSetOracle(a), ZERO)

    pi, r_s = Scalar.of_pi(1), Scalar.of_pi(r)
    half = r_s.scale(Fraction(1, 2))
    profile = Profile(
        pieces=_pieces(terms, -pi, -r_s, binding) + _pieces(terms, r_s, pi, binding),
        inner_radius=r_s,
        cell_pos=_pieces(terms, half, r_s, binding),
        cell_neg=_pieces(terms, -r_s, -half, binding),
        origin_value=origin,
        binding=binding,
    )
    logger.info(
        "Perfil de dimensión: %d trozos, radio interior %s, máximo %d",
        len(profile.pieces) + len(profile.cell_pos) + len(profile.cell_neg),
        r_s,
        profile.max_value(),
    )
    return profile


def profile_stats(profile: Profile) -> ProfileStats:
    return ProfileStats(max=profile.max_value(), integral=profile.integral())


# --- Cotas ---


class BoundMode(Enum):
    SYMMETRIC_THM1 = "thm1"
    SYMMETRIC_PROP1 = "prop1"


@dataclass(frozen=True)
class BoundCheck:
    holds: bool
    max_value: int
    n: int
    mode: BoundMode
    support_limit: Scalar

    def __bool__(self) -> bool:
        return self.holds


def support_limit(n: int, mode: BoundMode) -> Scalar:
    if mode is BoundMode.SYMMETRIC_THM1:
        return Scalar.of_pi(Fraction(2 ** (n + 2), 3))
    return Scalar.of_pi(2 * n)


def check_bound(a: IntervalSet, n: int, mode: BoundMode) -> BoundCheck:
    """D ≤ n en casi todo punto, para soportes dentro de [−L, L) con L según el modo."""
    if n < 1:
        raise ValueError(f"n debe ser un entero positivo: {n}")
    limit = support_limit(n, mode)
    key = a.binding.key
    if not a.is_empty:
        lo, hi = a.bounds
        if key(lo) < -key(limit) or key(hi) > key(limit):
            raise SupportOutOfRange(
                f"El soporte [{lo}, {hi}) no está dentro de [−{limit}, {limit})"
            )
    top = dimension_profile(a).max_value()
    return BoundCheck(holds=top <= n, max_value=top, n=n, mode=mode, support_limit=limit)


# --- Testigo de ‖D‖∞ ≥ n + 1 ---


@dataclass(frozen=True)
class WitnessLanding:
    j: int
    k: int
    point: Scalar
    member: bool


@dataclass(frozen=True)
class WitnessReport:
    pairs: Tuple[Tuple[int, int], ...]
    xi_sample: Scalar
    dim: int
    ok: bool
    landings: Tuple[WitnessLanding, ...] = ()


def check_witness(p: Params) -> WitnessReport:
    oracle = WaveletSetBuilder(p).oracle()
    xi = witness_interval(p).midpoint()
    pairs = witness_pairs(p)
    landings = tuple(
        WitnessLanding(j, k, point, oracle.contains(point))
        for j, k in pairs
        for point in [(xi + Scalar.of_pi(2 * k)).scale(_pow2(j))]
    )
    dim = dimension_at(oracle, xi)
    ok = dim >= p.n + 1 and all(landing.member for landing in landings)
    if not ok:
        logger.warning("Testigo fallido para n=%d: dimensión %d", p.n, dim)
    return WitnessReport(tuple(pairs), xi, dim, ok, landings)
