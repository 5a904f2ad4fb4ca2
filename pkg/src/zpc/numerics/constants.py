"""
Constantes numériques partagées:
- découpage de 2π en trois morceaux (réduction de phase)
- paramètres de sommation compensée
- paramètres de quadrature de Gauss composite
"""

import math

import numpy as np

# Précision machine (float64)
EPS: float = float(np.finfo(np.float64).eps)

# Dekker: 2**27 + 1 sépare un float64 en deux moitiés de 26 bits
SPLITTER: float = 134217729.0

TWO_PI: float = 2.0 * math.pi

# 2π = TWO_PI_HI + TWO_PI_MID + TWO_PI_LO ; TWO_PI_HI garde 30 bits de mantisse
_MANTISSA, _EXPONENT = math.frexp(TWO_PI)
TWO_PI_HI: float = math.ldexp(math.floor(math.ldexp(_MANTISSA, 30)), _EXPONENT - 30)
TWO_PI_MID: float = TWO_PI - TWO_PI_HI
# 2π − fl(2π)
TWO_PI_LO: float = 2.4492935982947064e-16

# k·TWO_PI_HI reste exact tant que |k| < 2**23
MAX_REDUCED_ARGUMENT: float = 2.0**22 * TWO_PI

# Taille des blocs de la somme par paires + Kahan
SUM_BLOCK: int = 4096

# Marge multiplicative du modèle d'erreur d'arrondi
SUMMATION_SAFETY: float = 8.0

# Quadrature de Gauss composite
GAUSS_ORDER: int = 16
MAX_DOUBLING_LEVELS: int = 8
NODE_BATCH: int = 1024

__all__ = [
    "EPS",
    "SPLITTER",
    "TWO_PI",
    "TWO_PI_HI",
    "TWO_PI_MID",
    "TWO_PI_LO",
    "MAX_REDUCED_ARGUMENT",
    "SUM_BLOCK",
    "SUMMATION_SAFETY",
    "GAUSS_ORDER",
    "MAX_DOUBLING_LEVELS",
    "NODE_BATCH",
]
