"""
Constantes pour la formule explicite:
- hauteurs de troncature admissibles
- grilles de maximisation du lemme sur les blocs
"""

import math

# Troncature Y et coupure W au-dessus du premier zéro
Y_MIN: float = 14.0
W_MIN: float = 14.0

# Argument minimal de ψ(x)
X_MIN: float = 2.0

# Termes d'ordre inférieur: -log 2π - ½ log(1 - x^-2)
LOG_TWO_PI: float = math.log(2.0 * math.pi)

# Y(x) = Y_FACTOR · √x · log²(2x)
Y_FACTOR: float = 3.0

# Grille en v' (intervalles géométriques) et seuil d'inclusion des ordonnées
V_GRID_MIN: int = 8
DEFAULT_V_GRID: int = 8
ORDINATE_REFINE_MAX: int = 512

# Constante enregistrée de l'enveloppe (x/Y) log²(xY)
ENVELOPE_C: float = 5.0

__all__ = [
    "Y_MIN",
    "W_MIN",
    "X_MIN",
    "LOG_TWO_PI",
    "Y_FACTOR",
    "V_GRID_MIN",
    "DEFAULT_V_GRID",
    "ORDINATE_REFINE_MAX",
    "ENVELOPE_C",
]
