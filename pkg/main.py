#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""main.py

Wavesets - conjuntos wavelet MSF exactos y su función de dimensión

Configura logging, interpreta la línea de órdenes y despacha cada subcomando
a la biblioteca de core/. Códigos de salida: 0 propiedad cierta, 1 propiedad falsa,
2 error de uso o de datos.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import settings
from utils.logging_setup import configure_logging
from utils.math_utils import parse_rational
from core._types import Scalar, to_decimal
from core.catalog import CATALOG, get_entry
from core.construction import Params, WaveletSetBuilder
from core.dimension import BoundMode, check_bound, check_witness, dimension_at, dimension_profile, profile_stats
from core.errors import (
    AccumulationAtZero,
    BindingMismatch,
    DocumentError,
    EpsOutOfRange,
    MalformedInterval,
    SupportOutOfRange,
)
from core.identities import verify_construction_identities
from core.oracle import IntervalSetOracle
from core.partition import wavelet_verdict
from core.set_loader import FileSetLoader
from render.csv_export import CsvProfileRenderer
from render.svg_plot import SvgProfileRenderer

logger = logging.getLogger(__name__)

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE = 0, 1, 2

USAGE_ERRORS = (
    DocumentError,
    EpsOutOfRange,
    SupportOutOfRange,
    MalformedInterval,
    BindingMismatch,
    AccumulationAtZero,
)


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _scalar(text: str) -> Scalar:
    try:
        return Scalar.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"Entero inválido: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"Debe ser positivo: {value}")
    return value


def _depth(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"Entero inválido: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"Debe ser no negativo: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavesets",
        description="Construcción y verificación exacta de conjuntos wavelet MSF.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=_positive_int, required=True)
        p.add_argument("--eps-ratio", type=_rational, required=True, help="ε en unidades de π (p/q)")

    p = sub.add_parser("construct", help="escribe una truncación de W(n, ε)")
    add_params(p)
    p.add_argument("--depth", type=_depth, default=settings.DEFAULT_DEPTH)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("verify", help="veredicto de conjunto wavelet")
    p.add_argument("file", type=Path)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("dim", help="D(ξ) en un punto")
    p.add_argument("file", type=Path)
    p.add_argument("--xi", type=_scalar, required=True, help="ξ en unidades de π, p. ej. 2/3+1/80eps")

    p = sub.add_parser("profile", help="perfil de D sobre [−π, π)")
    p.add_argument("file", type=Path)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--svg", type=Path)
    p.add_argument("--bound", type=_positive_int)
    p.add_argument("--mode", choices=[m.value for m in BoundMode], default=BoundMode.SYMMETRIC_THM1.value)

    p = sub.add_parser("witness", help="comprueba ‖D‖∞ ≥ n + 1")
    add_params(p)

    p = sub.add_parser("identities", help="identidades de traslación y dilatación")
    add_params(p)
    p.add_argument("--depth", type=_positive_int, default=settings.DEFAULT_DEPTH)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("catalog", help="escribe un conjunto de referencia")
    p.add_argument("name", choices=sorted(CATALOG))
    p.add_argument("--out", type=Path, required=True)

    return parser


class CommandRunner:
    """
    Encapsula el despacho de subcomandos. Cada método cmd_* devuelve el código de salida.
    """

    def __init__(self, out=None) -> None:
        self.out = out or sys.stdout
        self.loader = FileSetLoader()

    def _print(self, *parts) -> None:
        print(*parts, file=self.out)

    def _params(self, args) -> Params:
        return Params.from_ratio(args.n, args.eps_ratio)

    def cmd_construct(self, args) -> int:
        truncated = WaveletSetBuilder(self._params(args)).truncate(args.depth)
        self.loader.save(truncated, args.out)
        b = truncated.params.eps
        self._print(f"depth: {truncated.depth}")
        self._print(f"intervals: {len(truncated.set)}")
        self._print(f"measure: {truncated.set.measure()}")
        self._print(f"excess: {truncated.excess_measure}")
        self._print(f"excess_decimal: {to_decimal(truncated.excess_measure, b, settings.DECIMAL_DIGITS)}")
        return EXIT_TRUE

    def cmd_verify(self, args) -> int:
        document = self.loader.load(args.file)
        verdict = wavelet_verdict(document.set)
        if args.json:
            self._print(json.dumps(verdict.to_json(), indent=settings.JSON_INDENT, ensure_ascii=False))
        else:
            self._print(f"is_wavelet_set: {str(verdict.is_wavelet_set).lower()}")
            for label, report in zip(("translation", "dilation_pos", "dilation_neg"), verdict.reports()):
                reason = f" failure={report.failure_reason.value}" if report.failure_reason else ""
                self._print(f"{label}: gap={report.gap_measure} overlap={report.overlap_measure}{reason}")
        return EXIT_TRUE if verdict.is_wavelet_set else EXIT_FALSE

    def cmd_dim(self, args) -> int:
        document = self.loader.load(args.file)
        oracle = IntervalSetOracle(document.set)
        if args.xi.has_eps and not document.set.binding.explicit:
            raise BindingMismatch("ξ usa ε pero el documento no tiene eps_ratio")
        self._print(f"dim: {dimension_at(oracle, args.xi)}")
        return EXIT_TRUE

    def cmd_profile(self, args) -> int:
        document = self.loader.load(args.file)
        check = None
        if args.bound is not None:
            # valida el soporte antes de exportar nada
            check = check_bound(document.set, args.bound, BoundMode(args.mode))
        profile = dimension_profile(document.set)
        CsvProfileRenderer().render(profile, args.out)
        if args.svg is not None:
            SvgProfileRenderer(bound=args.bound).render(profile, args.svg)
        stats = profile_stats(profile)
        self._print(f"max: {stats.max}")
        self._print(f"integral: {stats.integral}")
        if check is not None:
            self._print(f"bound: {check.n} ({check.mode.value}) {'holds' if check.holds else 'fails'}")
            return EXIT_TRUE if check.holds else EXIT_FALSE
        return EXIT_TRUE

    def cmd_witness(self, args) -> int:
        report = check_witness(self._params(args))
        pairs = ", ".join(f"({j},{k})" for j, k in report.pairs)
        self._print(f"pairs: {pairs}")
        self._print(f"xi: {report.xi_sample}")
        self._print(f"dim: {report.dim}")
        self._print(f"ok: {str(report.ok).lower()}")
        return EXIT_TRUE if report.ok else EXIT_FALSE

    def cmd_identities(self, args) -> int:
        report = verify_construction_identities(self._params(args), args.depth)
        if args.json:
            self._print(json.dumps(report.to_json(), indent=settings.JSON_INDENT, ensure_ascii=False))
        else:
            for check in report.checks:
                status = "ok" if check.passed else ("info" if check.informational else "FAIL")
                self._print(f"[{status}] {check.name} ({check.reading})")
            self._print(f"all_passed: {str(report.all_passed).lower()}")
        return EXIT_TRUE if report.all_passed else EXIT_FALSE

    def cmd_catalog(self, args) -> int:
        entry = get_entry(args.name)
        self.loader.save(entry.set, args.out)
        self._print(f"{entry.name}: {len(entry.set)} intervals -> {args.out}")
        return EXIT_TRUE

    def run(self, argv: Optional[List[str]] = None) -> int:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_TRUE if exc.code in (0, None) else EXIT_USAGE

        handler = getattr(self, f"cmd_{args.command}")
        try:
            return handler(args)
        except USAGE_ERRORS as exc:
            logger.debug("Error de uso en %s: %s", args.command, exc)
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        except Exception as e:
            logger.critical("Error no controlado en el nivel superior: %s", e, exc_info=True)
            return EXIT_FALSE


def run(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    return CommandRunner().run(argv)


if __name__ == "__main__":
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        print("\nSaliendo...")
        sys.exit(0)
