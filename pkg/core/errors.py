"""
Este modulo define excepciones personalizadas para los errores del cálculo exacto,
de la construcción de conjuntos wavelet y de la carga de documentos.
Estas excepciones facilitan distinguir errores de uso (exit 2 en el CLI) de resultados negativos.
"""


class MalformedInterval(ValueError):
    """Intervalo con lo >= hi."""


class BindingMismatch(Exception):
    """Dos conjuntos ligados a valores distintos de eps."""


class AccumulationAtZero(Exception):
    """El conjunto toca o cruza el 0: el plegado diádico no termina."""


class EpsOutOfRange(ValueError):
    """eps fuera de (0, delta(n))."""


class SupportOutOfRange(Exception):
    """El soporte no cumple la hipótesis de la cota pedida."""


class ZeroInput(ValueError):
    pass


class TruncationMismatch(ArithmeticError):
    """La medida de una truncación no sigue la forma cerrada de su exceso."""


class DocumentError(Exception):
    pass


class ParseError(DocumentError):
    pass


class VersionError(DocumentError):
    pass
