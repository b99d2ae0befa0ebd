# En: core/set_loader.py

from __future__ import annotations
from abc import ABC, abstractmethod
from dataclasses import dataclass
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import settings
from utils.math_utils import format_rational, parse_rational
from ._types import EpsBinding, Interval, Scalar
from .construction import TruncatedSet
from .errors import BindingMismatch, ParseError, VersionError
from .interval_set import IntervalSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedDocument:
    set: IntervalSet
    canonical: bool = True
    n: Optional[int] = None
    depth: Optional[int] = None
    excess: Optional[Scalar] = None


def to_document(
    target: Union[IntervalSet, TruncatedSet],
) -> Dict[str, Any]:
    """Documento versión 1 con orden de campos fijo: version, eps_ratio, n, depth, excess, intervals."""
    doc: Dict[str, Any] = {"version": settings.DOCUMENT_VERSION}
    if isinstance(target, TruncatedSet):
        interval_set = target.set
        doc["eps_ratio"] = format_rational(target.params.eps.ratio)
        doc["n"] = target.params.n
        doc["depth"] = target.depth
        doc["excess"] = target.excess_measure.to_json()
    else:
        interval_set = target
        if interval_set.binding.explicit:
            doc["eps_ratio"] = format_rational(interval_set.binding.ratio)
    doc["intervals"] = [
        {"lo": iv.lo.to_json(), "hi": iv.hi.to_json()} for iv in interval_set
    ]
    return doc


def dumps(target: Union[IntervalSet, TruncatedSet]) -> str:
    return json.dumps(to_document(target), indent=settings.JSON_INDENT, ensure_ascii=False) + "\n"


def _scalar(raw: Any, where: str) -> Scalar:
    if not isinstance(raw, dict) or "pi" not in raw:
        raise ParseError(f"Extremo inválido en {where}: {raw!r}")
    try:
        return Scalar.from_json(raw)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"Racional inválido en {where}: {raw!r}") from exc


def loads(text: str) -> LoadedDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"JSON inválido: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("El documento debe ser un objeto JSON")
    if "version" not in doc:
        raise ParseError("Falta el campo version")
    if type(doc["version"]) is not int:
        raise ParseError(f"El campo version debe ser un entero: {doc['version']!r}")
    if doc["version"] != settings.DOCUMENT_VERSION:
        raise VersionError(f"Versión de documento no soportada: {doc['version']!r}")

    if "eps_ratio" in doc:
        try:
            binding = EpsBinding(parse_rational(doc["eps_ratio"]))
        except ValueError as exc:
            raise ParseError(f"eps_ratio inválido: {doc['eps_ratio']!r}") from exc
    else:
        binding = EpsBinding.implicit()

    raw_intervals = doc.get("intervals")
    if not isinstance(raw_intervals, list):
        raise ParseError("El campo intervals debe ser una lista")
    raw: List[Interval] = []
    for i, item in enumerate(raw_intervals):
        if not isinstance(item, dict):
            raise ParseError(f"Intervalo {i} inválido: {item!r}")
        raw.append(Interval(_scalar(item.get("lo"), f"intervals[{i}].lo"), _scalar(item.get("hi"), f"intervals[{i}].hi")))

    try:
        interval_set = IntervalSet.normalize(raw, binding)
    except BindingMismatch as exc:
        raise ParseError(f"El documento usa ε sin eps_ratio: {exc}") from exc

    canonical = len(raw) == len(interval_set) and all(
        binding.eq(a.lo, b.lo) and binding.eq(a.hi, b.hi) for a, b in zip(raw, interval_set)
    )
    if not canonical:
        logger.warning(
            "Documento no canónico: %d intervalos normalizados a %d", len(raw), len(interval_set)
        )

    for field_name, minimum in (("n", 1), ("depth", 0)):
        value = doc.get(field_name)
        if value is not None and (type(value) is not int or value < minimum):
            raise ParseError(f"Campo {field_name} inválido: {value!r}")

    excess = _scalar(doc["excess"], "excess") if "excess" in doc else None
    return LoadedDocument(
        set=interval_set,
        canonical=canonical,
        n=doc.get("n"),
        depth=doc.get("depth"),
        excess=excess,
    )


class ISetLoader(ABC):
    """Interfaz para cargadores de conjuntos."""

    @abstractmethod
    def load(self, path: Path) -> LoadedDocument:  # pragma: no cover - interface
        ...


class FileSetLoader(ISetLoader):
    """Lee y escribe documentos versión 1 en UTF-8."""

    def load(self, path: Path) -> LoadedDocument:
        path = Path(path)
        if not path.exists():
            raise ParseError(f"No se encuentra el archivo: {path}")
        logger.info("Cargando conjunto desde %s", path)
        try:
            text = path.read_text(encoding="utf-8")
        except Exception as exc:  # noqa: BLE001
            raise ParseError(str(exc)) from exc
        document = loads(text)
        logger.info("Conjunto cargado: %d intervalos", len(document.set))
        return document

    def save(self, target: Union[IntervalSet, TruncatedSet], path: Path) -> None:
        path = Path(path)
        path.write_text(dumps(target), encoding="utf-8")
        logger.info("Conjunto guardado en %s", path)


def save(target: Union[IntervalSet, TruncatedSet], path: Path) -> None:
    FileSetLoader().save(target, path)


def load(path: Path) -> LoadedDocument:
    return FileSetLoader().load(path)
