"""
Constantes pour les zéros de zêta:
- domaine de la formule de Riemann–Siegel
- grille de balayage et tolérances d'affinage
- contrôle de complétude (Riemann–von Mangoldt)
- format du cache binaire
"""

# Domaine de l'expansion asymptotique de θ et de Z
RS_MIN_HEIGHT: float = 10.0

# Le premier zéro est au-dessus de 14; toute ordonnée de table doit dépasser 13
FIRST_ORDINATE_FLOOR: float = 13.0

# Hauteurs calculables (au-delà: ingestion de tables publiées)
T_MAX_MIN: float = 20.0
T_MAX_MAX: float = 1.0e5

# Tolérance d'affinage des ordonnées
REFINE_TOL_MIN: float = 1.0e-12
REFINE_TOL_MAX: float = 1.0e-6
DEFAULT_REFINE_TOL: float = 1.0e-10

# Grille: pas = min(GRID_STEP_MAX, espacement de Gram / GRID_SAMPLES_PER_GAP)
GRID_STEP_MAX: float = 0.1
GRID_SAMPLES_PER_GAP: int = 4
SCAN_START: float = 10.0
CHUNK_WIDTH: float = 100.0
RESCAN_DENSITY: int = 4

# Évaluation vectorisée de Z par paquets de hauteurs
EVAL_BATCH: int = 2048

# Bissection rapide (sur Z de Riemann–Siegel) avant le polissage précis
FAST_BISECTION_STEPS: int = 30
POLISH_HALF_WIDTH: float = 0.02
PRECISE_DPS: int = 16

# Au-dessus de cette valeur, le signe de Z rapide (somme + C0) est sûr pour t >= 10;
# en dessous, hardy_z repasse par mpmath
FAST_Z_ERROR_BOUND: float = 0.1

# |cos 2πp| en dessous duquel C0 est évalué par sa limite
C0_SINGULAR_TOL: float = 1.0e-7

# |N(T) - (n_formula(T) + 7/8)| <= COMPLETENESS_C * log T
COMPLETENESS_C: float = 2.0
N_FORMULA_OFFSET: float = 7.0 / 8.0

# Résidu maximal |Z(γ)| aux ordonnées calculées
REFINE_RESIDUAL_MAX: float = 1.0e-5

# Précision par défaut des tables ingérées
DEFAULT_PRECISION: float = 1.0e-9
MAX_COMPUTED_PRECISION: float = 1.0e-6

# Cache binaire: magic, compte u64 LE, ordonnées f64 LE, t_max, précision
CACHE_MAGIC: bytes = b"ZPC1"
CACHE_SUFFIX: str = ".zpc"

# Rapport de densité: hauteurs entières T >= DENSITY_T_MIN avec T + 1 <= t_max
DENSITY_T_MIN: int = 19

SOURCES: tuple[str, ...] = ("computed", "ingested")

__all__ = [
    "RS_MIN_HEIGHT",
    "FIRST_ORDINATE_FLOOR",
    "T_MAX_MIN",
    "T_MAX_MAX",
    "REFINE_TOL_MIN",
    "REFINE_TOL_MAX",
    "DEFAULT_REFINE_TOL",
    "GRID_STEP_MAX",
    "GRID_SAMPLES_PER_GAP",
    "SCAN_START",
    "CHUNK_WIDTH",
    "RESCAN_DENSITY",
    "EVAL_BATCH",
    "FAST_BISECTION_STEPS",
    "POLISH_HALF_WIDTH",
    "PRECISE_DPS",
    "FAST_Z_ERROR_BOUND",
    "C0_SINGULAR_TOL",
    "COMPLETENESS_C",
    "N_FORMULA_OFFSET",
    "REFINE_RESIDUAL_MAX",
    "DEFAULT_PRECISION",
    "MAX_COMPUTED_PRECISION",
    "CACHE_MAGIC",
    "CACHE_SUFFIX",
    "DENSITY_T_MIN",
    "SOURCES",
]
