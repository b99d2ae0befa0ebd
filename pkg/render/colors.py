"""
Colores por defecto (R,G,B).
"""

WHITE = (255, 255, 255)
BLACK = (0, 0, 0)
GRAY = (128, 128, 128)
LIGHT_GRAY = (220, 220, 220)
BLUE = (31, 119, 180)
ORANGE = (255, 127, 14)


def to_mpl(rgb):
    """(R,G,B) en 0..255 a la tupla 0..1 que espera matplotlib."""
    return tuple(channel / 255 for channel in rgb)


# Tema por defecto para los gráficos de perfil
def default_theme():
    return {
        "bg": WHITE,
        "axes": BLACK,
        "grid": LIGHT_GRAY,
        "outer": BLUE,
        "dyadic": ORANGE,
        "bound": GRAY,
    }
