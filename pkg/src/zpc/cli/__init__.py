"""Ligne de commande `zpc` (click): zeros, psi, fcorr, explicit, scan."""

from __future__ import annotations

import click

from .commands import LabCommandError, cli
from .config import RunConfig, resolve_cache_dir


def main(argv: list[str] | None = None) -> int:
    """
    Exécute `zpc` et retourne le code de sortie (0, 2 usage, 3 domaine, 4 numérique).
    """
    try:
        result = cli.main(args=argv, prog_name="zpc", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


__all__ = ["main", "cli", "LabCommandError", "RunConfig", "resolve_cache_dir"]
