"""
Construcción exacta del conjunto wavelet W(n, ε) de banda limitada.

W = S1 ∪ … ∪ S6 ∪ (X ∪ Y ∪ Z) ∪ V, donde X, Y, Z son las uniones de la familia autosemejante
P_j = (P_{j−1} + c)/2^{n+2} (P ∈ {X, Y, Z}) y V es la ventana c + [π/6 + ε/2^{n+3}, π/3)
menos los agujeros 2^{n+2}·P_j, j ≥ 1.

Todas las cantidades están en el anillo exacto de Scalar; ε = ρπ se fija con Params.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import logging
from typing import Dict, List, Optional, Tuple

from ._types import EpsBinding, Interval, RationalLike, Scalar, ZERO
from .errors import EpsOutOfRange, TruncationMismatch
from .interval_set import IntervalSet, union_all
from .oracle import SetOracle

logger = logging.getLogger(__name__)


def _pi(coef: RationalLike) -> Scalar:
    return Scalar.of_pi(coef)


def _eps(coef: RationalLike) -> Scalar:
    return Scalar.of_eps(coef)


def delta_bound(n: int) -> Scalar:
    """δ(n) = 2^{n+2}π / (3(2^{n+2} − 1)): cota superior estricta para ε."""
    if n < 1:
        raise ValueError(f"n debe ser un entero positivo: {n}")
    big = 2 ** (n + 2)
    return _pi(Fraction(big, 3 * (big - 1)))


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Params:
    n: int
    eps: EpsBinding

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"n debe ser un entero positivo: {self.n!r}")
        if not self.eps.explicit:
            raise EpsOutOfRange("La construcción necesita un valor explícito de ε")
        delta = delta_bound(self.n).pi
        if not 0 < self.eps.ratio < delta:
            raise EpsOutOfRange(
                f"eps exceeds delta = {delta.numerator}/{delta.denominator}·π "
                f"(eps = {self.eps.ratio.numerator}/{self.eps.ratio.denominator}·π)"
            )

    @classmethod
    def from_ratio(cls, n: int, ratio: RationalLike) -> "Params":
        return cls(n, EpsBinding(ratio))

    @property
    def parity(self) -> Parity:
        return Parity.EVEN if self.n % 2 == 0 else Parity.ODD

    @property
    def dilation(self) -> int:
        """2^{n+2}, el factor de contracción inverso de la familia."""
        return 2 ** (self.n + 2)

    @property
    def support_radius(self) -> Scalar:
        """M = 2^{n+2}π/3."""
        return _pi(Fraction(self.dilation, 3))

    @property
    def shift(self) -> Scalar:
        """c_n: constante de la recursión (múltiplo entero de 2π)."""
        if self.parity is Parity.EVEN:
            return _pi(Fraction(self.dilation - 4, 3))
        return _pi(Fraction(self.dilation - 2, 3))

    @property
    def s1_shift(self) -> Scalar:
        """Traslación que lleva S1 junto a S5/S6 (par) o entre S3 y S4 (impar)."""
        m2 = self.support_radius.scale(2)
        if self.parity is Parity.EVEN:
            return m2 - _pi(Fraction(2, 3))
        return m2 - _pi(Fraction(4, 3))

    @property
    def fixed_point(self) -> Scalar:
        return self.shift / (self.dilation - 1)

    @property
    def fact_interval(self) -> Interval:
        """[π/6 + ε/2^{n+3}, π/3]: intervalo que contiene las semillas (cerrado a la derecha)."""
        return Interval(_pi(Fraction(1, 6)) + _eps(Fraction(1, 2 * self.dilation)), _pi(Fraction(1, 3)))

    @property
    def basin(self) -> Interval:
        return Interval(_pi(Fraction(1, 6)), _pi(Fraction(1, 3)))

    @property
    def window(self) -> Interval:
        """Ventana de V: c + [π/6 + ε/2^{n+3}, π/3)."""
        return self.fact_interval.shift(self.shift)


@dataclass(frozen=True)
class Pieces:
    parity: Parity
    s1: IntervalSet
    s2: IntervalSet
    s3: IntervalSet
    s4: IntervalSet
    s5: IntervalSet
    s6: IntervalSet
    x0: IntervalSet
    y0: IntervalSet
    z0: IntervalSet
    degenerate: Tuple[str, ...] = ()

    def named(self) -> Dict[str, IntervalSet]:
        return {
            "S1": self.s1,
            "S2": self.s2,
            "S3": self.s3,
            "S4": self.s4,
            "S5": self.s5,
            "S6": self.s6,
            "X0": self.x0,
            "Y0": self.y0,
            "Z0": self.z0,
        }

    def s_pieces(self) -> List[IntervalSet]:
        return [self.s1, self.s2, self.s3, self.s4, self.s5, self.s6]

    def seeds(self) -> Tuple[IntervalSet, IntervalSet, IntervalSet]:
        return (self.x0, self.y0, self.z0)


def build_pieces(p: Params) -> Pieces:
    """S1..S6 y las semillas X0, Y0, Z0 tal como se definen para cada paridad."""
    b = p.eps
    big = p.dilation
    m = p.support_radius
    c = p.shift
    e = _eps(1)
    third, sixth = Fraction(1, 3), Fraction(1, 6)

    def iv(lo: Scalar, hi: Scalar) -> IntervalSet:
        return IntervalSet.single(lo, hi, b)

    s1 = iv(-m, -m + e)
    s2 = iv(_pi(-third) + e / big, _pi(-sixth))
    x0 = iv(
        _pi(sixth) + e / (2 * big),
        _pi(third - Fraction(2, big)) + e / big,
    )
    # (S2 + c)/2^{n+2}: Y0 en el caso par, Z0 en el impar
    s2_image = s2.shift(c).scale(Fraction(1, big))

    if p.parity is Parity.EVEN:
        s3 = iv(m + e - _pi(2), m - _pi(Fraction(5, 3)) + e / big)
        s4 = iv(m - _pi(Fraction(3, 2)), m - _pi(Fraction(7, 6)) + e / (2 * big))
        s5 = iv(m - _pi(1), m - _pi(Fraction(2, 3)))
        s6 = iv(m - _pi(Fraction(2, 3)) + e, m + e)
        y0 = s2_image
        z_lo = _pi(third - Fraction(2, 3 * big))
        z0 = iv(z_lo, z_lo + e / big)
    else:
        s3 = iv(m + e - _pi(2), m - _pi(Fraction(4, 3)))
        s4 = iv(m - _pi(Fraction(4, 3)) + e, m - _pi(1) + e / big)
        s5 = iv(m - _pi(Fraction(5, 6)), m - _pi(Fraction(1, 2)) + e / (2 * big))
        s6 = iv(m - _pi(third), m + e)
        y_lo = _pi(third - Fraction(4, 3 * big))
        y0 = iv(y_lo, y_lo + e / big)
        z0 = s2_image

    pieces = Pieces(p.parity, s1, s2, s3, s4, s5, s6, x0, y0, z0)
    degenerate = tuple(name for name, s in pieces.named().items() if s.is_empty)
    if degenerate:
        logger.warning(
            "Piezas vacías para n=%d, ε=%s·π: %s", p.n, b.ratio, ", ".join(degenerate)
        )
        pieces = Pieces(p.parity, s1, s2, s3, s4, s5, s6, x0, y0, z0, degenerate)
    logger.debug("Piezas construidas para n=%d (%s)", p.n, p.parity.value)
    return pieces


class SelfSimilarFamily:
    """
    Niveles X_j, Y_j, Z_j de la recursión P_j = (P_{j−1} + c)/2^{n+2}.
    Los niveles se calculan bajo demanda y se guardan.
    """

    def __init__(self, params: Params, pieces: Pieces) -> None:
        self.params = params
        self.shift = params.shift
        self.contraction = Fraction(1, params.dilation)
        self.fixed_point = params.fixed_point
        self.basin = params.basin
        self._levels: List[Tuple[IntervalSet, IntervalSet, IntervalSet]] = [pieces.seeds()]

    def level(self, j: int) -> Tuple[IntervalSet, IntervalSet, IntervalSet]:
        if j < 0:
            raise ValueError(f"El nivel debe ser no negativo: {j}")
        while len(self._levels) <= j:
            prev = self._levels[-1]
            self._levels.append(
                tuple(s.shift(self.shift).scale(self.contraction) for s in prev)
            )
        return self._levels[j]

    def level_set(self, j: int) -> IntervalSet:
        return union_all(self.level(j), self.params.eps)

    def seeds(self) -> IntervalSet:
        return self.level_set(0)

    def seed_measure(self) -> Scalar:
        """s0 = |X0| + |Y0| + |Z0|."""
        total = ZERO
        for s in self.level(0):
            total = total + s.measure()
        return total


@dataclass(frozen=True)
class TruncatedSet:
    """
    Representación finita de W a profundidad J: incluye los niveles 0..J y quita de la
    ventana solo los agujeros 1..J, así que cubre de más.
    """

    params: Params
    depth: int
    set: IntervalSet
    excess_measure: Scalar
    missing_measure: Scalar
    surplus_measure: Scalar = field(default=ZERO)


class WaveletSetBuilder:
    """
    Constructor de W(n, ε) y de sus truncaciones.

    Arg:
        params (Params): n y la ligadura de ε, ya validados.
    """

    def __init__(self, params: Params) -> None:
        self.params = params
        self.pieces = build_pieces(params)
        self.family = SelfSimilarFamily(params, self.pieces)

    def window(self) -> IntervalSet:
        w = self.params.window
        return IntervalSet.single(w.lo, w.hi, self.params.eps)

    def holes(self, depth: int) -> IntervalSet:
        """⋃_{1≤j≤depth} 2^{n+2}·P_j."""
        big = self.params.dilation
        levels = [self.family.level_set(j).scale(big) for j in range(1, depth + 1)]
        return union_all(levels, self.params.eps)

    def remainder(self, depth: int) -> IntervalSet:
        """V_J = ventana ∖ ⋃_{1≤j≤J} 2^{n+2}·P_j."""
        return self.window().difference(self.holes(depth))

    def truncate(self, depth: int) -> TruncatedSet:
        if depth < 0:
            raise ValueError(f"La profundidad debe ser no negativa: {depth}")
        p = self.params
        parts = self.pieces.s_pieces()
        parts.extend(self.family.level_set(j) for j in range(depth + 1))
        parts.append(self.remainder(depth))
        result = union_all(parts, p.eps)

        big = p.dilation
        tail = self.family.seed_measure() / Fraction(big) ** depth
        missing = tail / (big - 1)
        excess = result.measure() - _pi(2)
        if p.eps.key(excess) != p.eps.key(tail):
            # con piezas vacías la forma cerrada no aplica
            if not self.pieces.degenerate:
                raise TruncationMismatch(
                    f"El exceso de la truncación ({excess}) no sigue la cola geométrica ({tail})"
                )
            logger.warning(
                "El exceso de la truncación (%s) no sigue la cola geométrica (%s)", excess, tail
            )
        logger.info(
            "Truncación de W(%d, %s·π) a profundidad %d: %d intervalos, exceso %s",
            p.n,
            p.eps.ratio,
            depth,
            len(result),
            excess,
        )
        return TruncatedSet(
            params=p,
            depth=depth,
            set=result,
            excess_measure=excess,
            missing_measure=missing,
            surplus_measure=missing.scale(big),
        )

    def oracle(self) -> "WaveletSetOracle":
        return WaveletSetOracle(self)


class Region(Enum):
    PIECE = "piece"
    LEVEL = "level"
    HOLE = "hole"
    WINDOW = "window"
    BASIN = "basin"
    FIXED_POINT = "fixed_point"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Membership:
    member: bool
    region: Region
    depth: Optional[int] = None
    piece: Optional[str] = None


class WaveletSetOracle(SetOracle):
    """
    Pertenencia exacta al W sin truncar.

    En la cuenca [π/6, π/3) se itera la inversa g(y) = 2^{n+2}y − c: como
    |g(y) − p*| = 2^{n+2}|y − p*|, toda órbita distinta de p* sale de la cuenca
    o cae en una semilla en un número finito de pasos.
    """

    def __init__(self, builder: WaveletSetBuilder) -> None:
        self._builder = builder
        p = builder.params
        self._params = p
        self._key = p.eps.key
        self._pieces = list(builder.pieces.named().items())[:6]
        self._seeds = builder.family.seeds()
        self._basin = p.basin
        self._window = p.window
        self._fixed = self._key(p.fixed_point)

    @property
    def binding(self) -> EpsBinding:
        return self._params.eps

    @property
    def support_lo(self) -> Scalar:
        return -self._params.support_radius

    @property
    def support_hi(self) -> Scalar:
        return self._params.support_radius + _eps(1)

    @property
    def dist0(self) -> Scalar:
        return dist_from_zero(self._params)

    def _trace(self, y: Scalar) -> Tuple[Optional[int], bool]:
        """(j, False) si y ∈ P_j; (None, True) si y = p*; (None, False) si sale de la cuenca."""
        big = self._params.dilation
        c = self._params.shift
        depth = 0
        while True:
            if self._seeds.contains(y):
                return depth, False
            if self._key(y) == self._fixed:
                return None, True
            if not self._basin.contains(y, self.binding):
                return None, False
            y = y.scale(big) - c
            depth += 1

    def classify(self, x: Scalar) -> Membership:
        for name, piece in self._pieces:
            if piece.contains(x):
                return Membership(True, Region.PIECE, piece=name)

        if self._basin.contains(x, self.binding):
            depth, fixed = self._trace(x)
            if fixed:
                return Membership(False, Region.FIXED_POINT)
            if depth is not None:
                return Membership(True, Region.LEVEL, depth)
            return Membership(False, Region.BASIN)

        if self._window.contains(x, self.binding):
            # x ∈ 2^{n+2}P_j  ⇔  x − c ∈ P_{j−1}
            depth, fixed = self._trace(x - self._params.shift)
            if fixed:
                return Membership(False, Region.FIXED_POINT)
            if depth is not None:
                return Membership(False, Region.HOLE, depth + 1)
            return Membership(True, Region.WINDOW)

        return Membership(False, Region.OUTSIDE)

    def contains(self, x: Scalar) -> bool:
        return self.classify(x).member


# --- funciones de conveniencia ---


def level_set(p: Params, j: int) -> IntervalSet:
    return WaveletSetBuilder(p).family.level_set(j)


def truncate(p: Params, depth: int) -> TruncatedSet:
    return WaveletSetBuilder(p).truncate(depth)


def member(p: Params, x: Scalar) -> bool:
    return WaveletSetBuilder(p).oracle().contains(x)


def dist_from_zero(p: Params) -> Scalar:
    """Cota inferior de |x| en W: S2 acaba en −π/6 y la cuenca empieza en π/6."""
    return _pi(Fraction(1, 6))


def witness_pairs(p: Params) -> List[Tuple[int, int]]:
    """
    Pares (j, k) con 2^j(ξ + 2kπ) ∈ W en el intervalo testigo:
    k_j = (2^{n+1−j} − 1)/3 si n − j es impar, l_j = −(2^{n+1−j} + 1)/3 si es par.
    """
    pairs: List[Tuple[int, int]] = []
    for j in range(1, p.n + 2):
        power = 2 ** (p.n + 1 - j)
        if (p.n - j) % 2 == 1:
            k, rest = divmod(power - 1, 3)
        else:
            k, rest = divmod(-(power + 1), 3)
        assert rest == 0, (p.n, j)
        pairs.append((j, k))
    return pairs


def witness_interval(p: Params) -> Interval:
    """[2π/3, 2π/3 + ε/2^{n+1}), donde D ≥ n + 1."""
    lo = _pi(Fraction(2, 3))
    return Interval(lo, lo + _eps(Fraction(1, 2 ** (p.n + 1))))
