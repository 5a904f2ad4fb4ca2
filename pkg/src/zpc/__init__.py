"""
zpc: laboratoire numérique de corrélation de paires des zéros de zêta.

Sous-paquets:
    - numerics: sommation compensée, réduction de phase, quadrature de Gauss
    - zeta_zeros: formule de Riemann–Siegel, recherche et cache des zéros
    - prime_arith: crible de Λ(n), ψ, π, li, termes d'erreur R et P, J(x,h)
    - pair_correlation: w_β, F_β(x,T) par somme directe et par intégrale
    - explicit_formula: formule explicite tronquée, blocs dyadiques, Lemme 1
    - conjecture_lab: fonctions de calibrage β, 𝓛, W, M(x) et rapports
    - cli: interface en ligne de commande
"""

from __future__ import annotations

__all__ = ["__version__"]

__version__ = "0.2.0"
