"""
Uniones finitas normalizadas de intervalos semiabiertos [lo, hi) con extremos Scalar,
y sus operaciones booleanas y afines.

Forma canónica: intervalos ordenados por lo, disjuntos y no adyacentes (hi_i < lo_{i+1}),
de modo que la igualdad de conjuntos es igualdad de listas (comparando valores bajo la ligadura).
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
import logging

from ._types import EpsBinding, Interval, RationalLike, Scalar, ZERO, as_fraction
from .errors import BindingMismatch, MalformedInterval

logger = logging.getLogger(__name__)


def _check_binding(intervals: Iterable[Interval], binding: EpsBinding) -> None:
    if binding.explicit:
        return
    for iv in intervals:
        if iv.lo.has_eps or iv.hi.has_eps:
            raise BindingMismatch(
                f"El intervalo {iv} tiene términos en ε pero no hay eps_ratio"
            )


@dataclass(frozen=True, eq=False)
class IntervalSet:
    intervals: Tuple[Interval, ...]
    binding: EpsBinding

    # --- construcción ---

    @classmethod
    def normalize(
        cls, raw: Iterable[Interval], binding: EpsBinding, allow_empty: bool = False
    ) -> "IntervalSet":
        """
        Forma canónica de una lista de intervalos. Con allow_empty=True los intervalos
        vacíos (lo >= hi) se descartan; si no, se rechazan con MalformedInterval.
        """
        raw = list(raw)
        _check_binding(raw, binding)
        key = binding.key
        kept: List[Interval] = []
        for iv in raw:
            if key(iv.lo) >= key(iv.hi):
                if allow_empty:
                    continue
                raise MalformedInterval(f"Intervalo mal formado: {iv}")
            kept.append(iv)

        kept.sort(key=lambda iv: key(iv.lo))
        merged: List[Interval] = []
        for iv in kept:
            if merged and key(iv.lo) <= key(merged[-1].hi):
                last = merged[-1]
                if key(iv.hi) > key(last.hi):
                    merged[-1] = Interval(last.lo, iv.hi)
                continue
            merged.append(iv)
        return cls(tuple(merged), binding)

    @classmethod
    def empty(cls, binding: EpsBinding) -> "IntervalSet":
        return cls((), binding)

    @classmethod
    def single(cls, lo: Scalar, hi: Scalar, binding: EpsBinding) -> "IntervalSet":
        """Un intervalo; vacío si lo >= hi (las piezas degeneradas de una construcción)."""
        return cls.normalize([Interval(lo, hi)], binding, allow_empty=True)

    # --- consultas ---

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        if len(self) != len(other):
            return False
        try:
            binding = self.binding.merge(other.binding)
        except BindingMismatch:
            return False
        key = binding.key
        return all(
            key(a.lo) == key(b.lo) and key(a.hi) == key(b.hi)
            for a, b in zip(self.intervals, other.intervals)
        )

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(str(iv) for iv in self.intervals)
        return f"IntervalSet({{{body}}}, ρ={self.binding.ratio})"

    def contains(self, x: Scalar) -> bool:
        key = self.binding.key
        t = key(x)
        for iv in self.intervals:
            if t < key(iv.lo):
                return False
            if t < key(iv.hi):
                return True
        return False

    def measure(self) -> Scalar:
        total = ZERO
        for iv in self.intervals:
            total = total + iv.length()
        return total

    @property
    def bounds(self) -> Optional[Tuple[Scalar, Scalar]]:
        if not self.intervals:
            return None
        return self.intervals[0].lo, self.intervals[-1].hi

    def is_subset(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_empty

    # --- operaciones afines ---

    def shift(self, s: Scalar) -> "IntervalSet":
        return IntervalSet.normalize([iv.shift(s) for iv in self.intervals], self._merged(s))

    def translate_2pi(self, k: int) -> "IntervalSet":
        return self.shift(Scalar.of_pi(2 * k))

    def scale(self, r: RationalLike) -> "IntervalSet":
        r = as_fraction(r)
        if r <= 0:
            raise ValueError(f"Solo se admiten factores positivos: {r}")
        return IntervalSet(tuple(iv.scale(r) for iv in self.intervals), self.binding)

    def dilate_pow2(self, m: int) -> "IntervalSet":
        return self.scale(Fraction(2) ** m)

    def _merged(self, s: Scalar) -> EpsBinding:
        if s.has_eps and not self.binding.explicit:
            raise BindingMismatch("Desplazamiento con ε sobre un conjunto sin eps_ratio")
        return self.binding

    # --- operaciones booleanas ---

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return set_boolean("union", self, other)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        return set_boolean("intersect", self, other)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        return set_boolean("difference", self, other)

    def symmetric_difference(self, other: "IntervalSet") -> "IntervalSet":
        return self.difference(other).union(other.difference(self))

    __or__ = union
    __and__ = intersect
    __sub__ = difference

    def positive_part(self) -> "IntervalSet":
        return self.intersect(IntervalSet.single(ZERO, self._upper_cap(), self.binding))

    def negative_part(self) -> "IntervalSet":
        return self.intersect(IntervalSet.single(-self._upper_cap(), ZERO, self.binding))

    def _upper_cap(self) -> Scalar:
        # cota que excede a todos los extremos en valor absoluto
        if not self.intervals:
            return Scalar.of_pi(1)
        key = self.binding.key
        big = max(abs(key(self.intervals[0].lo)), abs(key(self.intervals[-1].hi)))
        return Scalar.of_pi(big + 1)

    def dist_from_zero(self) -> Optional[Scalar]:
        """
        inf{|x| : x ∈ A}, o None si A toca o atraviesa el 0
        (lo <= 0 < hi, o hi == 0 por la izquierda).
        """
        key = self.binding.key
        best: Optional[Scalar] = None
        for iv in self.intervals:
            lo, hi = key(iv.lo), key(iv.hi)
            if lo <= 0 <= hi:
                return None
            candidate = iv.lo if lo > 0 else -iv.hi
            if best is None or key(candidate) < key(best):
                best = candidate
        return best

    def radius(self) -> Scalar:
        """max{|lo|, |hi|} sobre todos los extremos (0 si es vacío)."""
        if not self.intervals:
            return ZERO
        lo, hi = self.intervals[0].lo, self.intervals[-1].hi
        key = self.binding.key
        return hi if abs(key(hi)) >= abs(key(lo)) else -lo


_PREDICATES: dict[str, Callable[[bool, bool], bool]] = {
    "union": lambda a, b: a or b,
    "intersect": lambda a, b: a and b,
    "difference": lambda a, b: a and not b,
}


def _sorted_points(points: Iterable[Scalar], binding: EpsBinding) -> List[Scalar]:
    """Extremos ordenados por valor, sin repetir valores."""
    key = binding.key
    out: List[Scalar] = []
    for p in sorted(points, key=key):
        if out and key(out[-1]) == key(p):
            continue
        out.append(p)
    return out


def set_boolean(op: str, a: IntervalSet, b: IntervalSet) -> IntervalSet:
    """Unión, intersección o diferencia exactas; el resultado es canónico."""
    if op not in _PREDICATES:
        raise ValueError(f"Operación desconocida: {op}")
    binding = a.binding.merge(b.binding)
    a_b = IntervalSet(a.intervals, binding)
    b_b = IntervalSet(b.intervals, binding)
    predicate = _PREDICATES[op]

    points = _sorted_points(
        [p for s in (a, b) for iv in s for p in iv.as_tuple()], binding
    )
    pieces: List[Interval] = []
    for lo, hi in zip(points, points[1:]):
        # cada segmento elemental está entero dentro o entero fuera de cada operando
        if predicate(a_b.contains(lo), b_b.contains(lo)):
            pieces.append(Interval(lo, hi))
    return IntervalSet.normalize(pieces, binding)


def union_all(sets: Sequence[IntervalSet], binding: EpsBinding) -> IntervalSet:
    raw: List[Interval] = []
    for s in sets:
        binding = binding.merge(s.binding)
        raw.extend(s.intervals)
    return IntervalSet.normalize(raw, binding)


def coverage(
    pieces: Iterable[Interval], window: Interval, binding: EpsBinding
) -> List[Tuple[Interval, int]]:
    """
    Barre la ventana y devuelve sus segmentos elementales con la multiplicidad exacta
    con que los cubren las piezas (incluidos los de multiplicidad 0). Segmentos contiguos
    con igual multiplicidad se fusionan.
    """
    key = binding.key
    w_lo, w_hi = key(window.lo), key(window.hi)
    clipped: List[Interval] = []
    for iv in pieces:
        lo = iv.lo if key(iv.lo) > w_lo else window.lo
        hi = iv.hi if key(iv.hi) < w_hi else window.hi
        if key(lo) < key(hi):
            clipped.append(Interval(lo, hi))

    points = _sorted_points(
        [window.lo, window.hi] + [p for iv in clipped for p in iv.as_tuple()], binding
    )
    deltas: Dict[Fraction, int] = {}
    for iv in clipped:
        deltas[key(iv.lo)] = deltas.get(key(iv.lo), 0) + 1
        deltas[key(iv.hi)] = deltas.get(key(iv.hi), 0) - 1

    segments: List[Tuple[Interval, int]] = []
    n = 0
    for lo, hi in zip(points, points[1:]):
        n += deltas.get(key(lo), 0)
        if segments and segments[-1][1] == n:
            prev = segments[-1][0]
            segments[-1] = (Interval(prev.lo, hi), n)
        else:
            segments.append((Interval(lo, hi), n))
    return segments
