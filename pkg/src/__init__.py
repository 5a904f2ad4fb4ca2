"""Racine du package src (zpc).

Rend le package importable et offre des raccourcis:
- from src import main, load_zeros

Import paresseux pour éviter le coût et les effets secondaires lors de
l'importation de `src` (numpy/scipy, configuration du logging).
"""

from importlib import import_module
from typing import Any

__all__ = ["main", "load_zeros", "__version__"]
__version__ = "0.2.0"


def _load_module(name: str):
    """
    Importer paresseusement un sous-module de `src.zpc`.
    """
    return import_module(f"src.zpc.{name}")


def main(argv: list[str] | None = None) -> Any:
    """
    Lance l'interface en ligne de commande `zpc`.
    Permet `from src import main`.
    """
    mod = _load_module("cli")
    return mod.main(argv)


def load_zeros(path: str) -> Any:
    """
    Charge un ZeroSet depuis un cache binaire "ZPC1".
    """
    mod = _load_module("zeta_zeros")
    return mod.load_cache(path)
