"""
Conjuntos wavelet de referencia.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from ._types import EpsBinding, Interval, Scalar
from .interval_set import IntervalSet


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    set: IntervalSet
    provenance: str


def _from_pi_pairs(pairs: List[Tuple[Fraction, Fraction]]) -> IntervalSet:
    return IntervalSet.normalize(
        [Interval(Scalar.of_pi(lo), Scalar.of_pi(hi)) for lo, hi in pairs],
        EpsBinding.implicit(),
    )


def shannon() -> IntervalSet:
    """[−2π, −π) ∪ [π, 2π)."""
    return _from_pi_pairs([(Fraction(-2), Fraction(-1)), (Fraction(1), Fraction(2))])


def journe() -> IntervalSet:
    """[−32π/7, −4π) ∪ [−π, −4π/7) ∪ [4π/7, π) ∪ [4π, 32π/7)."""
    return _from_pi_pairs(
        [
            (Fraction(-32, 7), Fraction(-4)),
            (Fraction(-1), Fraction(-4, 7)),
            (Fraction(4, 7), Fraction(1)),
            (Fraction(4), Fraction(32, 7)),
        ]
    )


_BUILDERS: Dict[str, Tuple[Callable[[], IntervalSet], str]] = {
    "shannon": (shannon, "Wavelet de Shannon (MRA), D ≡ 1"),
    "journe": (journe, "Wavelet de Journé (no MRA), máx D = 2 dentro de [−16π/3, 16π/3)"),
}

CATALOG: Dict[str, CatalogEntry] = {
    name: CatalogEntry(name, build(), note) for name, (build, note) in _BUILDERS.items()
}


def get_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(
            f"Conjunto desconocido {name!r}; disponibles: {', '.join(sorted(CATALOG))}"
        ) from None
