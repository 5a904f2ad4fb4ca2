"""
Configuration de la ligne de commande:
- répertoire du cache (ZPC_CACHE_DIR, défaut <projet>/cache)
- RunConfig: paramètres d'une exécution, validés et sérialisables
"""

from __future__ import annotations

import math
import numbers
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from src.zpc.errors import DomainError

CACHE_DIR_ENV = "ZPC_CACHE_DIR"
CACHE_FILE = "zeros.zpc"
METADATA_FILE = "runs.jsonl"
COMMANDS: tuple[str, ...] = ("zeros", "psi", "fcorr", "explicit", "scan")

# this file is at src/zpc/cli/config.py
PROJECT_ROOT = Path(__file__).resolve().parents[3]


def resolve_cache_dir() -> Path:
    """Répertoire du cache et des métadonnées d'exécution."""
    env_dir = os.environ.get(CACHE_DIR_ENV)
    return Path(env_dir) if env_dir else PROJECT_ROOT / "cache"


def default_cache_path() -> Path:
    return resolve_cache_dir() / CACHE_FILE


def default_metadata_path() -> Path:
    return resolve_cache_dir() / METADATA_FILE


def _json_value(value: Any) -> Any:
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if isinstance(value, Mapping):
        return {str(k): _json_value(v) for k, v in value.items()}
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        value = value.item()  # numpy scalar
    return value


def _non_finite(value: Any) -> float | None:
    """First inf or nan found in a raw option value, None if all finite."""
    if isinstance(value, (list, tuple)):
        items = value
    elif isinstance(value, Mapping):
        items = list(value.values())
    else:
        if isinstance(value, numbers.Real) and not math.isfinite(float(value)):
            return float(value)
        return None
    for item in items:
        bad = _non_finite(item)
        if bad is not None:
            return bad
    return None


@dataclass(frozen=True)
class RunConfig:
    """
    Paramètres d'une sous-commande.

    Attributes:
        command: nom de la sous-commande
        params: valeurs des options (JSON-compatibles après normalisation)
    """

    command: str
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        clean = {}
        for key in sorted(self.params):
            raw = self.params[key]
            bad = _non_finite(raw)
            if bad is not None:
                raise DomainError(f"parameter {key}={bad!r} is not finite")
            clean[key] = _json_value(raw)
        object.__setattr__(self, "params", clean)

    def to_record(self) -> dict:
        return {"command": self.command, "params": dict(self.params)}

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> "RunConfig":
        return cls(command=record["command"], params=dict(record.get("params", {})))


__all__ = [
    "CACHE_DIR_ENV",
    "CACHE_FILE",
    "METADATA_FILE",
    "COMMANDS",
    "RunConfig",
    "resolve_cache_dir",
    "default_cache_path",
    "default_metadata_path",
]
