"""
Utilidades para Wavesets
"""
