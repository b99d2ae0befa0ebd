"""Paquete de exportación de perfiles de dimensión (CSV y SVG)."""
