"""
Constantes pour la corrélation de paires F_β(x, T):
- tuiles de la double somme directe
- bornes de la quadrature (queue, largeur de panneau)
- domaine de sûreté des phases
"""

# Hauteur minimale T
T_MIN: float = 3.0

# Tuiles carrées de la boucle sur les paires (ordonnées par tuile)
TILE_SIZE: int = 1024

# Forme quadratique dense (f_direct_many) jusqu'à ce nombre de zéros
DENSE_MAX_ZEROS: int = 2048

# Éléments (nœuds x zéros) par paquet de phases
PHASE_BATCH_ELEMENTS: int = 1_000_000

# log x au-delà duquel la réduction de phase n'est plus garantie
LOG_X_CAP: float = 25.0

# Tolérance de queue de f_integral
TAIL_TOL_MIN: float = 1.0e-12
TAIL_TOL_MAX: float = 1.0e-4
DEFAULT_TAIL_TOL: float = 1.0e-10

# Tolérance des quadratures de l'identité intégrale
DEFAULT_QUAD_TOL: float = 1.0e-10

# Panneau initial: min(PANEL_OSCILLATIONS / Δγ, PANEL_DECAY / β)
PANEL_OSCILLATIONS: float = 8.0
PANEL_DECAY: float = 0.5

# Arrêt des estimations successives de f_integral
INTEGRAL_RTOL: float = 1.0e-11

# Paire de Fourier: U = FOURIER_DECAY / β (e^{-2βU} ~ 1e-14)
FOURIER_DECAY: float = 16.1
FOURIER_PANEL: float = 4.0
FOURIER_TOL_MIN: float = 1.0e-8

# Marge de la somme compensée dans le modèle d'erreur (en plus de log2 du nombre de termes)
DIRECT_ERROR_TERMS: float = 8.0

# Rapport F/(β T log² T) observé, borne triviale (constante enregistrée)
TRIVIAL_BOUND_C: float = 2.0

# Échantillons par défaut du découpage de l'identité intégrale
DEFAULT_SPLIT_SAMPLES: int = 64

METHODS: tuple[str, ...] = ("direct", "integral")

__all__ = [
    "T_MIN",
    "TILE_SIZE",
    "DENSE_MAX_ZEROS",
    "PHASE_BATCH_ELEMENTS",
    "LOG_X_CAP",
    "TAIL_TOL_MIN",
    "TAIL_TOL_MAX",
    "DEFAULT_TAIL_TOL",
    "DEFAULT_QUAD_TOL",
    "PANEL_OSCILLATIONS",
    "PANEL_DECAY",
    "INTEGRAL_RTOL",
    "FOURIER_DECAY",
    "FOURIER_PANEL",
    "FOURIER_TOL_MIN",
    "DIRECT_ERROR_TERMS",
    "TRIVIAL_BOUND_C",
    "DEFAULT_SPLIT_SAMPLES",
    "METHODS",
]
