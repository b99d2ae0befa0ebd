"""
Tipos básicos exactos: escalares de la forma (a + b·ρ)·π e intervalos semiabiertos.
"""

from __future__ import annotations
from dataclasses import dataclass, field, replace as dataclass_replace
from enum import Enum
from fractions import Fraction
import re
from typing import Dict, Tuple, Union

from utils.math_utils import format_rational, parse_rational, round_pi_multiple
from .errors import BindingMismatch, EpsOutOfRange

RationalLike = Union[int, Fraction, str]

_EPS_TERM_RE = re.compile(r"^(.*?)\s*(?:·|\*)?\s*(?:eps|ε)\s*$")


def as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("No se aceptan flotantes en el estado exacto")
    return Fraction(value)


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class EpsBinding:
    """
    Fija ε = ρ·π. Una ligadura implícita (explicit=False) sirve para conjuntos sin términos en ε:
    se combina con cualquier otra y no se serializa.
    """

    ratio: Fraction
    explicit: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ratio", as_fraction(self.ratio))
        if self.ratio <= 0:
            raise EpsOutOfRange(f"ρ debe ser positivo: {self.ratio}")

    @classmethod
    def implicit(cls) -> "EpsBinding":
        return cls(Fraction(1), explicit=False)

    def merge(self, other: "EpsBinding") -> "EpsBinding":
        if not other.explicit:
            return self
        if not self.explicit:
            return other
        if self.ratio != other.ratio:
            raise BindingMismatch(
                f"Ligaduras de eps incompatibles: {self.ratio} != {other.ratio}"
            )
        return self

    def key(self, x: "Scalar") -> Fraction:
        """Valor exacto de x en unidades de π."""
        return x.pi + x.eps * self.ratio

    def cmp(self, x: "Scalar", y: "Scalar") -> Ordering:
        d = self.key(x) - self.key(y)
        if d < 0:
            return Ordering.LT
        if d > 0:
            return Ordering.GT
        return Ordering.EQ

    def lt(self, x: "Scalar", y: "Scalar") -> bool:
        return self.key(x) < self.key(y)

    def le(self, x: "Scalar", y: "Scalar") -> bool:
        return self.key(x) <= self.key(y)

    def eq(self, x: "Scalar", y: "Scalar") -> bool:
        return self.key(x) == self.key(y)

    def min(self, *xs: "Scalar") -> "Scalar":
        return min(xs, key=self.key)

    def max(self, *xs: "Scalar") -> "Scalar":
        return max(xs, key=self.key)


@dataclass(frozen=True)
class Scalar:
    """a·π + b·ε con a, b racionales. Nunca contiene flotantes."""

    pi: Fraction = Fraction(0)
    eps: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "pi", as_fraction(self.pi))
        object.__setattr__(self, "eps", as_fraction(self.eps))

    @classmethod
    def of_pi(cls, coef: RationalLike) -> "Scalar":
        return cls(as_fraction(coef), Fraction(0))

    @classmethod
    def of_eps(cls, coef: RationalLike) -> "Scalar":
        return cls(Fraction(0), as_fraction(coef))

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.pi + other.pi, self.eps + other.eps)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.pi - other.pi, self.eps - other.eps)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.pi, -self.eps)

    def scale(self, r: RationalLike) -> "Scalar":
        r = as_fraction(r)
        return Scalar(self.pi * r, self.eps * r)

    def __mul__(self, r: RationalLike) -> "Scalar":
        return self.scale(r)

    __rmul__ = __mul__

    def __truediv__(self, r: RationalLike) -> "Scalar":
        return self.scale(1 / as_fraction(r))

    @property
    def is_zero(self) -> bool:
        return self.pi == 0 and self.eps == 0

    @property
    def has_eps(self) -> bool:
        return self.eps != 0

    def units(self, binding: EpsBinding) -> Fraction:
        return binding.key(self)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        if self.pi != 0:
            terms.append(f"{format_rational(self.pi)}·π")
        if self.eps != 0:
            if terms:
                sign = "-" if self.eps < 0 else "+"
                terms.append(f"{sign} {format_rational(abs(self.eps))}·ε")
            else:
                terms.append(f"{format_rational(self.eps)}·ε")
        return " ".join(terms)

    def to_json(self) -> Dict[str, str]:
        return {"pi": format_rational(self.pi), "eps": format_rational(self.eps)}

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> "Scalar":
        return cls(parse_rational(data["pi"]), parse_rational(data.get("eps", "0/1")))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """
        Interpreta expresiones en unidades de π: "a/b", "a/b+c/d·eps", "a/b - c/d*eps", "c/d eps".
        """
        raw = text.strip().replace(" ", "")
        if not raw:
            raise ValueError("Expresión vacía")
        # separar en términos con signo, respetando el signo inicial
        parts = re.findall(r"[+\-−]?[^+\-−]+", raw)
        if "".join(parts) != raw:
            raise ValueError(f"Expresión incompleta: {text!r}")
        pi_coef = Fraction(0)
        eps_coef = Fraction(0)
        for part in parts:
            match = _EPS_TERM_RE.match(part)
            if match:
                coef_text = match.group(1)
                if coef_text in ("", "+"):
                    coef = Fraction(1)
                elif coef_text in ("-", "−"):
                    coef = Fraction(-1)
                else:
                    coef = parse_rational(coef_text)
                eps_coef += coef
            else:
                pi_coef += parse_rational(part)
        return cls(pi_coef, eps_coef)


def compare(x: Scalar, y: Scalar, binding: EpsBinding) -> Ordering:
    return binding.cmp(x, y)


def to_decimal(x: Scalar, binding: EpsBinding, digits: int) -> str:
    """Aproximación decimal correctamente redondeada; solo para reportes, nunca para lógica."""
    return round_pi_multiple(binding.key(x), digits)


PI = Scalar.of_pi(1)
TWO_PI = Scalar.of_pi(2)
ZERO = Scalar()


@dataclass(frozen=True)
class Interval:
    """
    Intervalo semiabierto [lo, hi). La condición lo < hi depende de la ligadura,
    así que la valida IntervalSet.normalize y no el constructor.
    """

    lo: Scalar
    hi: Scalar

    def length(self) -> Scalar:
        return self.hi - self.lo

    def shift(self, s: Scalar) -> "Interval":
        return Interval(self.lo + s, self.hi + s)

    def scale(self, r: RationalLike) -> "Interval":
        return Interval(self.lo.scale(r), self.hi.scale(r))

    def contains(self, x: Scalar, binding: EpsBinding) -> bool:
        return binding.le(self.lo, x) and binding.lt(x, self.hi)

    def is_empty(self, binding: EpsBinding) -> bool:
        return not binding.lt(self.lo, self.hi)

    def midpoint(self) -> Scalar:
        return (self.lo + self.hi).scale(Fraction(1, 2))

    def as_tuple(self) -> Tuple[Scalar, Scalar]:
        return (self.lo, self.hi)

    def replace(self, **change) -> "Interval":
        return dataclass_replace(self, **change)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi})"
