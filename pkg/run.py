#!/usr/bin/env python
"""
Point d'entrée du laboratoire zpc.
Exécute l'interface en ligne de commande.

Usage:
    python run.py zeros --t-max 100
    python run.py fcorr --x 5 --t 100 --beta 1 --method both
    python run.py --help
Optionnel:
    export ZPC_CACHE_DIR=/chemin/vers/cache (cache des zéros + runs.jsonl)
"""

import sys

from src.zpc.cli import main

if __name__ == "__main__":
    sys.exit(main())
