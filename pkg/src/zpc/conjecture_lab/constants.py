"""
Constantes pour les conjectures et corollaires:
- paramètres par défaut des échéanciers β(T), 𝓛(T), W(x)
- grilles d'échantillonnage en v
- domaines de validité
"""

# Les échéanciers sont évalués à partir de T = 3
SCHEDULE_T_MIN: float = 3.0

# M(x) n'est défini que pour x >= 16
M_X_MIN: float = 16.0

# Corollaire 1: β = (log T)^(3 - 2a), 0 < a <= 3/2
DEFAULT_COR1_A: float = 1.0
COR1_A_MAX: float = 1.5

# Corollaire 3: β = log³T / (A⁴ (log log 2T)²), A > 1
DEFAULT_COR3_A: float = 2.0

# Corollaire 4: β = (log T)^(B/2) dans la normalisation cible
DEFAULT_COR4_B: float = 1.0

# W(x) = (log x)^A, constante « grande » non précisée
DEFAULT_WINDOW_A: float = 4.0

# 𝓛(T) = p · log T quand x ≈ T^p
DEFAULT_LOGX_POWER: float = 2.0

# Grille géométrique en v pour la statistique de la conjecture 2
V_SAMPLES_MIN: int = 16
DEFAULT_V_SAMPLES: int = 64

# Normalisation probabiliste: x >= 100 (log log log x > 0)
NORMALIZATION_X_MIN: float = 100.0

BETA_KINDS: tuple[str, ...] = ("constant", "cor1_power", "cor3_gm", "log_power")
ELL_KINDS: tuple[str, ...] = ("logT", "logx_proxy", "custom_power")
WINDOW_KINDS: tuple[str, ...] = ("log_power", "cor1_exp", "cor2_exp")
COROLLARIES: tuple[str, ...] = ("cor1", "cor2", "cor3", "cor4")

__all__ = [
    "SCHEDULE_T_MIN",
    "M_X_MIN",
    "DEFAULT_COR1_A",
    "COR1_A_MAX",
    "DEFAULT_COR3_A",
    "DEFAULT_COR4_B",
    "DEFAULT_WINDOW_A",
    "DEFAULT_LOGX_POWER",
    "V_SAMPLES_MIN",
    "DEFAULT_V_SAMPLES",
    "NORMALIZATION_X_MIN",
    "BETA_KINDS",
    "ELL_KINDS",
    "WINDOW_KINDS",
    "COROLLARIES",
]
