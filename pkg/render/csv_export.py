"""
Exportación de perfiles de dimensión a CSV.
"""

from __future__ import annotations
import csv
import logging
from pathlib import Path

import settings
from core._types import to_decimal
from core.dimension import Profile
from .renderer_base import IProfileRenderer

logger = logging.getLogger(__name__)

CSV_COLUMNS = ("zone", "breakpoint_lo", "breakpoint_hi", "lo_exact", "hi_exact", "value")


class CsvProfileRenderer(IProfileRenderer):
    """
    Una fila por trozo constante. Las celdas diádicas junto al 0 se repiten
    `dyadic_levels` veces (zona "dyadic:m" para la copia escalada por 2^{−m}).
    """

    def __init__(
        self,
        dyadic_levels: int = settings.PROFILE_CSV_DYADIC_LEVELS,
        digits: int = settings.DECIMAL_DIGITS,
    ) -> None:
        self.dyadic_levels = dyadic_levels
        self.digits = digits

    def render(self, profile: Profile, path: Path) -> None:
        rows = profile.expanded(self.dyadic_levels)
        with Path(path).open("w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for zone, interval, value in rows:
                writer.writerow(
                    (
                        zone,
                        to_decimal(interval.lo, profile.binding, self.digits),
                        to_decimal(interval.hi, profile.binding, self.digits),
                        str(interval.lo),
                        str(interval.hi),
                        value,
                    )
                )
        logger.info("Perfil exportado a CSV: %s (%d filas)", path, len(rows))
