"""
Constantes pour l'arithmétique des nombres premiers:
- capacité et taille des segments du crible
- tolérances de li(x)
- seuils des rapports (von Koch, résidu de transfert)
"""

# Crible segmenté (blocs de 2**20 entiers)
SEGMENT_SIZE: int = 1 << 20
SIEVE_CAPACITY: int = 100_000_000
SIEVE_MIN: int = 2

# li(x) = ∫_2^x dt / log t
LI_LOWER: float = 2.0
LI_ABS_TOL: float = 1.0e-9
LI_REL_TOL: float = 1.0e-13
LI_QUAD_LIMIT: int = 500

# Résidu de transfert R -> P: x >= RTOP_MIN_X
RTOP_MIN_X: float = 100.0

# Contrôle empirique |R(x)| <= VON_KOCH_C * sqrt(x) * log(x)**2
VON_KOCH_C: float = 2.0

__all__ = [
    "SEGMENT_SIZE",
    "SIEVE_CAPACITY",
    "SIEVE_MIN",
    "LI_LOWER",
    "LI_ABS_TOL",
    "LI_REL_TOL",
    "LI_QUAD_LIMIT",
    "RTOP_MIN_X",
    "VON_KOCH_C",
]
