"""Core package para Wavesets: escalares exactos, conjuntos de intervalos, plegado, construcción y dimensión."""
