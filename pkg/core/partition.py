"""
Verificación de conjuntos wavelet por plegado.

Un conjunto K es wavelet si sus trasladados K + 2kπ y sus dilatados 2^j K son particiones de ℝ.
Se comprueba plegando K sobre la celda aditiva [0, 2π) y sobre las celdas multiplicativas
[π, 2π) y [−2π, −π), y midiendo exactamente los huecos y solapamientos.
"""

from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import logging
import math
from typing import Any, Dict, List, Optional

import settings
from utils.math_utils import floor_log2
from ._types import EpsBinding, Interval, Scalar, ZERO, to_decimal
from .interval_set import IntervalSet, coverage

logger = logging.getLogger(__name__)


class FailureReason(Enum):
    ACCUMULATION_AT_ZERO = "AccumulationAtZero"


class Sign(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


TRANSLATION_CELL = Interval(ZERO, Scalar.of_pi(2))
POSITIVE_CELL = Interval(Scalar.of_pi(1), Scalar.of_pi(2))
NEGATIVE_CELL = Interval(Scalar.of_pi(-2), Scalar.of_pi(-1))


def pow2(m: int) -> Fraction:
    return Fraction(2) ** m


@dataclass(frozen=True)
class FoldReport:
    """
    Resultado de plegar un conjunto sobre una celda fundamental.
    cover ∪ gap = cell; overlap son los puntos alcanzados dos o más veces.
    """

    cell: Interval
    cover: IntervalSet
    gap: IntervalSet
    overlap: IntervalSet
    gap_measure: Scalar
    overlap_measure: Scalar
    excess_mass: Scalar
    pieces_measure: Scalar
    failure_reason: Optional[FailureReason] = None

    @property
    def is_exact(self) -> bool:
        key = self.cover.binding.key
        return (
            self.failure_reason is None
            and key(self.gap_measure) == 0
            and key(self.overlap_measure) == 0
        )

    def to_json(self, digits: int = settings.DECIMAL_DIGITS) -> Dict[str, Any]:
        binding = self.cover.binding

        def _measure(x: Scalar) -> Dict[str, Any]:
            return {"exact": x.to_json(), "decimal": to_decimal(x, binding, digits)}

        return {
            "cell": str(self.cell),
            "exact_partition": self.is_exact,
            "failure_reason": self.failure_reason.value if self.failure_reason else None,
            "gap_measure": _measure(self.gap_measure),
            "overlap_measure": _measure(self.overlap_measure),
            "gap": [str(iv) for iv in self.gap],
            "overlap": [str(iv) for iv in self.overlap],
        }


@dataclass(frozen=True)
class Verdict:
    translation: FoldReport
    dilation_pos: FoldReport
    dilation_neg: FoldReport

    @property
    def is_wavelet_set(self) -> bool:
        return all(r.is_exact for r in self.reports())

    def reports(self) -> tuple:
        return (self.translation, self.dilation_pos, self.dilation_neg)

    def to_json(self, digits: int = settings.DECIMAL_DIGITS) -> Dict[str, Any]:
        return {
            "is_wavelet_set": self.is_wavelet_set,
            "translation": self.translation.to_json(digits),
            "dilation_pos": self.dilation_pos.to_json(digits),
            "dilation_neg": self.dilation_neg.to_json(digits),
        }


def _report(
    pieces: List[Interval],
    cell: Interval,
    binding: EpsBinding,
    failure: Optional[FailureReason] = None,
) -> FoldReport:
    segments = coverage(pieces, cell, binding)
    cover = IntervalSet.normalize([iv for iv, n in segments if n >= 1], binding)
    gap = IntervalSet.normalize([iv for iv, n in segments if n == 0], binding)
    overlap = IntervalSet.normalize([iv for iv, n in segments if n >= 2], binding)

    excess = ZERO
    for iv, n in segments:
        if n >= 2:
            excess = excess + iv.length().scale(n - 1)
    pieces_measure = ZERO
    for iv in pieces:
        pieces_measure = pieces_measure + iv.length()

    return FoldReport(
        cell=cell,
        cover=cover,
        gap=gap,
        overlap=overlap,
        gap_measure=gap.measure(),
        overlap_measure=overlap.measure(),
        excess_mass=excess,
        pieces_measure=pieces_measure,
        failure_reason=failure,
    )


def fold_mod_2pi(a: IntervalSet) -> FoldReport:
    """Parte cada intervalo en los múltiplos de 2π y lleva cada trozo a [0, 2π)."""
    binding = a.binding
    key = binding.key
    pieces: List[Interval] = []
    for iv in a:
        cur = iv.lo
        while key(cur) < key(iv.hi):
            k = math.floor(key(cur) / 2)
            end = binding.min(iv.hi, Scalar.of_pi(2 * (k + 1)))
            pieces.append(Interval(cur, end).shift(Scalar.of_pi(-2 * k)))
            cur = end

    report = _report(pieces, TRANSLATION_CELL, binding)
    logger.debug(
        "Plegado por traslación: %d trozos, hueco %s, solape %s",
        len(pieces),
        report.gap_measure,
        report.overlap_measure,
    )
    return report


def _touches_zero(a: IntervalSet, sign: Sign) -> bool:
    key = a.binding.key
    for iv in a:
        lo, hi = key(iv.lo), key(iv.hi)
        if sign is Sign.POSITIVE and lo <= 0 < hi:
            return True
        if sign is Sign.NEGATIVE and lo < 0 <= hi:
            return True
    return False


def _fold_positive(part: IntervalSet) -> List[Interval]:
    binding = part.binding
    key = binding.key
    pieces: List[Interval] = []
    for iv in part:
        cur = iv.lo
        while key(cur) < key(iv.hi):
            m = floor_log2(key(cur))
            end = binding.min(iv.hi, Scalar.of_pi(pow2(m + 1)))
            pieces.append(Interval(cur, end).scale(pow2(-m)))
            cur = end
    return pieces


def _fold_negative(part: IntervalSet) -> List[Interval]:
    # se recorre hacia abajo desde hi para que cada trozo siga siendo [lo, hi)
    binding = part.binding
    key = binding.key
    pieces: List[Interval] = []
    for iv in part:
        cur = iv.hi
        while key(cur) > key(iv.lo):
            m = floor_log2(-key(cur))
            start = binding.max(iv.lo, Scalar.of_pi(-pow2(m + 1)))
            pieces.append(Interval(start, cur).scale(pow2(-m)))
            cur = start
    return pieces


def fold_dyadic(a: IntervalSet, sign: Sign) -> FoldReport:
    """
    Pliega la parte de signo `sign` sobre [π, 2π) o [−2π, −π) mediante potencias de 2.
    Un intervalo que toca o cruza el 0 necesitaría infinitos trozos: se informa como
    AccumulationAtZero en failure_reason, sin lanzar.
    """
    binding = a.binding
    cell = POSITIVE_CELL if sign is Sign.POSITIVE else NEGATIVE_CELL

    if _touches_zero(a, sign):
        logger.warning("Plegado diádico %s imposible: el conjunto toca el 0", sign.value)
        return _report([], cell, binding, FailureReason.ACCUMULATION_AT_ZERO)

    if sign is Sign.POSITIVE:
        pieces = _fold_positive(a.positive_part())
    else:
        pieces = _fold_negative(a.negative_part())

    report = _report(pieces, cell, binding)
    logger.debug(
        "Plegado diádico %s: %d trozos, hueco %s, solape %s",
        sign.value,
        len(pieces),
        report.gap_measure,
        report.overlap_measure,
    )
    return report


def wavelet_verdict(a: IntervalSet) -> Verdict:
    verdict = Verdict(
        translation=fold_mod_2pi(a),
        dilation_pos=fold_dyadic(a, Sign.POSITIVE),
        dilation_neg=fold_dyadic(a, Sign.NEGATIVE),
    )
    logger.info(
        "Veredicto calculado: %s (%d intervalos)",
        "conjunto wavelet" if verdict.is_wavelet_set else "no es conjunto wavelet",
        len(a),
    )
    return verdict
