"""
logging_setup.py

Configura el sistema de logging del proyecto con parámetros definidos en settings.py.
Genera el directorio de logs si no existe.

Uso:
    from utils.logging_setup import configure_logging
    configure_logging()

Luego usa logging.getLogger(__name__) en tus módulos.
"""

import logging
from pathlib import Path
import settings

_CONFIGURED = False


def _level(name: str) -> int:
    return getattr(logging, name.upper(), logging.INFO)


def configure_logging(force: bool = False) -> None:
    """
    Configura el logging para que el archivo de log se sobrescriba en cada inicio.
    La consola (stderr) solo recibe avisos, para no mezclar logs con la salida del CLI.
    """
    global _CONFIGURED
    if _CONFIGURED and not force:
        return

    handlers = []

    if settings.LOG_TO_FILE:
        log_dir: Path = settings.LOGS_DIR
        log_dir.mkdir(parents=True, exist_ok=True)
        log_file = log_dir / settings.LOG_FILE_BASENAME

        # El modo 'w' sobrescribe el archivo de log cada vez que se inicia el programa.
        file_handler = logging.FileHandler(log_file, mode="w", encoding="utf-8")
        file_handler.setLevel(_level(settings.LOG_LEVEL))
        handlers.append(file_handler)

    # Salida a consola (stderr por defecto)
    console_handler = logging.StreamHandler()
    console_handler.setLevel(_level(settings.CONSOLE_LOG_LEVEL))
    handlers.append(console_handler)

    logging.basicConfig(
        level=_level(settings.LOG_LEVEL),
        format=settings.LOG_FORMAT,
        datefmt=settings.DATE_FORMAT,
        handlers=handlers,
        force=True,  # asegura reconfiguración
    )
    _CONFIGURED = True
