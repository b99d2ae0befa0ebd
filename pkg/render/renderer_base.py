"""
Interfaz base para exportadores de perfiles.
"""

from __future__ import annotations
from abc import ABC, abstractmethod
from pathlib import Path

from core.dimension import Profile


class IProfileRenderer(ABC):
    @abstractmethod
    def render(self, profile: Profile, path: Path) -> None:
        """
        Escribe el perfil en `path`. La salida debe ser idéntica byte a byte
        para el mismo perfil.
        """
        ...
