"""
Gráfico escalonado del perfil de dimensión en SVG (matplotlib, backend Agg).
Los flotantes solo se usan aquí, para dibujar.
"""

from __future__ import annotations
import logging
from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

import settings  # noqa: E402
from core._types import to_decimal  # noqa: E402
from core.dimension import Profile  # noqa: E402
from .colors import default_theme, to_mpl  # noqa: E402
from .renderer_base import IProfileRenderer  # noqa: E402

logger = logging.getLogger(__name__)


class SvgProfileRenderer(IProfileRenderer):
    def __init__(
        self,
        dyadic_levels: int = settings.PROFILE_PLOT_DYADIC_LEVELS,
        bound: Optional[int] = None,
        theme: Optional[dict] = None,
    ) -> None:
        self.dyadic_levels = dyadic_levels
        self.bound = bound
        self.theme = theme or default_theme()

    def _edges(self, profile: Profile):
        rows = profile.expanded(self.dyadic_levels)
        digits = settings.DECIMAL_DIGITS
        lo = np.array([float(to_decimal(iv.lo, profile.binding, digits)) for _, iv, _ in rows])
        hi = np.array([float(to_decimal(iv.hi, profile.binding, digits)) for _, iv, _ in rows])
        values = np.array([value for _, _, value in rows], dtype=float)
        outer = np.array([zone == "outer" for zone, _, _ in rows], dtype=bool)
        # abscisas en unidades de π
        return lo / np.pi, hi / np.pi, values, outer

    def render(self, profile: Profile, path: Path) -> None:
        plt.rcParams["svg.hashsalt"] = settings.SVG_HASH_SALT
        theme = self.theme
        lo, hi, values, outer = self._edges(profile)

        fig, ax = plt.subplots(figsize=settings.SVG_FIGSIZE)
        fig.patch.set_facecolor(to_mpl(theme["bg"]))
        for a, b, v, is_outer in zip(lo, hi, values, outer):
            color = theme["outer"] if is_outer else theme["dyadic"]
            ax.stairs([v], [a, b], color=to_mpl(color), linewidth=1.5, baseline=None)
        if self.bound is not None:
            ax.axhline(self.bound, color=to_mpl(theme["bound"]), linestyle="--", linewidth=1)

        top = max(values.max() if values.size else 0, self.bound or 0)
        ax.set_xlim(-1, 1)
        ax.set_ylim(-0.2, top + 0.5)
        ax.set_xlabel("ξ / π")
        ax.set_ylabel("D(ξ)")
        ax.grid(True, color=to_mpl(theme["grid"]))
        fig.tight_layout()
        fig.savefig(Path(path), format="svg", metadata={"Date": None})
        plt.close(fig)
        logger.info("Perfil dibujado en %s", path)
