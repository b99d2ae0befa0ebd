"""
Configuraciones globales del proyecto Wavesets.

Edita estos valores para ajustar el logging, la precisión decimal de los reportes,
la exportación de perfiles, etc.
"""

from pathlib import Path

# Paths
BASE_DIR = Path(__file__).resolve().parent
LOGS_DIR = BASE_DIR / "logs"

# Documentos
DOCUMENT_VERSION = 1
JSON_INDENT = 2

# Reportes
DECIMAL_DIGITS = 12  # dígitos tras el punto en las representaciones decimales

# Construcción
DEFAULT_DEPTH = 6  # profundidad J por defecto de las truncaciones

# Perfiles
PROFILE_CSV_DYADIC_LEVELS = 6  # celdas diádicas cerca de 0 que se expanden en el CSV
PROFILE_PLOT_DYADIC_LEVELS = 10
SVG_FIGSIZE = (9.0, 3.0)
SVG_HASH_SALT = "wavesets"  # ids estables en el SVG

# Logging
LOG_LEVEL = "DEBUG"  # DEBUG, INFO, WARNING, ERROR, CRITICAL
CONSOLE_LOG_LEVEL = "WARNING"  # la consola es stderr; stdout queda para resultados
LOG_TO_FILE = True
LOG_FILE_BASENAME = "wavesets.log"
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
