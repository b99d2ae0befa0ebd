"""
Interfaz de pertenencia usada por las funciones de dimensión.
"""

from __future__ import annotations
from abc import ABC, abstractmethod

from ._types import EpsBinding, Scalar
from .errors import AccumulationAtZero
from .interval_set import IntervalSet


class SetOracle(ABC):
    """
    Decide x ∈ K para un conjunto acotado K, alejado del 0.
    contains(x) es False fuera de [support_lo, support_hi) y para |x| < dist0.
    """

    @property
    @abstractmethod
    def binding(self) -> EpsBinding:
        ...

    @property
    @abstractmethod
    def support_lo(self) -> Scalar:
        ...

    @property
    @abstractmethod
    def support_hi(self) -> Scalar:
        ...

    @property
    @abstractmethod
    def dist0(self) -> Scalar:
        """Cota inferior positiva de |x| sobre K."""
        ...

    @abstractmethod
    def contains(self, x: Scalar) -> bool:
        ...


class IntervalSetOracle(SetOracle):
    """Oráculo trivial de una unión finita de intervalos."""

    def __init__(self, interval_set: IntervalSet):
        self._set = interval_set
        if interval_set.is_empty:
            # vacío: cualquier soporte sirve, contains siempre es False
            self._lo = self._hi = Scalar.of_pi(1)
            self._dist0 = Scalar.of_pi(1)
            return
        dist0 = interval_set.dist_from_zero()
        if dist0 is None:
            raise AccumulationAtZero("El conjunto toca el 0: la suma diádica no es finita")
        self._lo, self._hi = interval_set.bounds
        self._dist0 = dist0

    @property
    def interval_set(self) -> IntervalSet:
        return self._set

    @property
    def binding(self) -> EpsBinding:
        return self._set.binding

    @property
    def support_lo(self) -> Scalar:
        return self._lo

    @property
    def support_hi(self) -> Scalar:
        return self._hi

    @property
    def dist0(self) -> Scalar:
        return self._dist0

    def contains(self, x: Scalar) -> bool:
        return self._set.contains(x)
