"""
Sorties d'une exécution: CSV du rapport (fichier ou stdout) et un
enregistrement JSON-lines de métadonnées (clés triées, sans horodatage).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import click

from src.zpc import __version__
from src.zpc.logging_setup import get_logger
from src.zpc.report import ScanReport

from .config import RunConfig, _json_value

log = get_logger(__name__)


def emit_report(report: ScanReport, out: Path | None) -> Path | None:
    """Écrit le CSV dans `out`, ou sur stdout si `out` est None."""
    if out is None:
        click.echo(report.to_csv(), nl=False)
        return None
    path = report.write_csv(out)
    log.info("CSV %s written: %s (%d rows)", report.name, path, len(report))
    return path


def metadata_record(config: RunConfig, report: ScanReport | None, outputs: dict[str, Any]) -> dict:
    record = config.to_record()
    record["version"] = __version__
    record["outputs"] = outputs
    if report is not None:
        record["report"] = report.name
        record["rows"] = len(report)
        record["recorded"] = report.metadata
    return _json_value(record)


def append_metadata(path: Path, record: dict) -> Path:
    """Ajoute une ligne au journal d'exécutions."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "a", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")
    log.debug("metadata appended to %s", path)
    return path


def summary(message: str, *args: Any) -> None:
    """Ligne de résumé sur stderr (stdout reste réservé au CSV)."""
    click.echo(message % args if args else message, err=True)


__all__ = ["emit_report", "metadata_record", "append_metadata", "summary"]
