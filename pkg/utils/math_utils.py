"""
Funciones matemáticas auxiliares: racionales exactos, logaritmos diádicos y dígitos de π.
Nada aquí usa punto flotante.
"""

from __future__ import annotations
from fractions import Fraction
from functools import lru_cache
from itertools import count, islice
import math
import re

_RATIONAL_RE = re.compile(r"^\s*([+\-−]?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def floor_log2(value: Fraction) -> int:
    """Devuelve el mayor m entero con 2^m <= value (value > 0), sin logaritmos flotantes."""
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"floor_log2 requiere un valor positivo: {value}")
    m = value.numerator.bit_length() - value.denominator.bit_length()
    if Fraction(2) ** m > value:
        m -= 1
    return m


def parse_rational(text: str) -> Fraction:
    """
    Interpreta "p", "p/q", "-p/q" o "−p/q" como racional exacto.
    Rechaza decimales y notación científica: los parámetros matemáticos son siempre exactos.
    """
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise ValueError(f"Racional inválido: {text!r}")
    sign, num, den = match.groups()
    denominator = int(den) if den is not None else 1
    if denominator == 0:
        raise ValueError(f"Denominador nulo: {text!r}")
    value = Fraction(int(num), denominator)
    return -value if sign in ("-", "−") else value


def format_rational(value: Fraction) -> str:
    """Formato canónico "p/q" (los enteros llevan "/1")."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


# --- Dígitos de π (spigot entero, sin flotantes) ---


def _compose(a, b):
    aq, ar, as_, at = a
    bq, br, bs, bt = b
    return (aq * bq, aq * br + ar * bt, as_ * bq + at * bs, as_ * br + at * bt)


def _extract(z, j):
    q, r, s, t = z
    return (q * j + r) // (s * j + t)


def _gen_pi_digits():
    z = (1, 0, 0, 1)
    x = map(lambda k: (k, 4 * k + 2, 0, 2 * k + 1), count(1))
    while True:
        y = _extract(z, 3)
        while y != _extract(z, 4):
            z = _compose(z, next(x))
            y = _extract(z, 3)
        z = _compose((10, -10 * y, 0, 1), z)
        yield y


@lru_cache(maxsize=None)
def pi_floor(places: int) -> int:
    """floor(π·10^places) como entero exacto."""
    digits = islice(_gen_pi_digits(), places + 1)
    result = 0
    for d in digits:
        result = result * 10 + d
    return result


def round_pi_multiple(coef: Fraction, digits: int) -> str:
    """
    Redondeo correcto de coef·π con `digits` decimales.
    Se refina la aproximación de π hasta que ambas cotas redondean igual; como coef·π es
    irracional para coef != 0, nunca cae exactamente en un empate.
    """
    if digits < 1:
        raise ValueError("digits debe ser >= 1")
    coef = Fraction(coef)
    if coef == 0:
        return "0." + "0" * digits

    scale = 10**digits
    places = digits + 10 + max(0, len(str(abs(coef.numerator))) - len(str(coef.denominator)))
    while True:
        p = pi_floor(places)
        unit = Fraction(1, 10**places)
        lo = coef * p * unit * scale
        hi = coef * (p + 1) * unit * scale
        if lo > hi:
            lo, hi = hi, lo
        r_lo = math.floor(lo + Fraction(1, 2))
        r_hi = math.floor(hi + Fraction(1, 2))
        if r_lo == r_hi:
            break
        places += 10

    sign = "-" if r_lo < 0 else ""
    whole, frac = divmod(abs(r_lo), scale)
    return f"{sign}{whole}.{frac:0{digits}d}"
