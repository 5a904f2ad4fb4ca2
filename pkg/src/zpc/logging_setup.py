"""
Logging for the zpc package.

Handlers hang on the package logger `src.zpc`, not on the root logger, so a
host program (pytest, a notebook) keeps its own configuration:

- rotating file `logs/zpc.log` (1 MB, 5 backups), INFO and above; the
  directory can be moved with ZPC_LOG_DIR
- console on stderr, WARNING and above; stdout stays reserved for CSV output
- file records carry the process id, since zero scans may run in a pool

`init_logging` is idempotent and runs on import. `reconfigure_logging`
changes only the fields it is given (the CLI uses it for --verbose).
"""

from __future__ import annotations

import logging
import os
import sys
import threading
from dataclasses import dataclass, replace
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

__all__ = [
    "LoggingConfig",
    "init_logging",
    "get_logger",
    "reconfigure_logging",
    "is_logging_initialized",
]

LOG_DIR_ENV = "ZPC_LOG_DIR"
LOG_FILE = "zpc.log"
PACKAGE_LOGGER = "src.zpc"

_LOCK = threading.Lock()
_ACTIVE: Optional["LoggingConfig"] = None


def _default_log_dir() -> Path:
    env_dir = os.environ.get(LOG_DIR_ENV)
    if env_dir:
        return Path(env_dir)
    # src/zpc/logging_setup.py -> <project>/logs
    return Path(__file__).resolve().parents[2] / "logs"


@dataclass(frozen=True)
class LoggingConfig:
    """Where and how much the package logs."""

    file_path: str
    file_level: int = logging.INFO
    console_level: int = logging.WARNING
    max_bytes: int = 1_000_000
    backup_count: int = 5
    file_fmt: str = "%(asctime)s | %(process)d | %(levelname)-8s | %(name)s | %(message)s"
    console_fmt: str = "zpc %(levelname)s | %(message)s"
    datefmt: str = "%Y-%m-%d %H:%M:%S"

    @classmethod
    def default(cls, file_path: Optional[str] = None) -> "LoggingConfig":
        if file_path is None:
            file_path = str(_default_log_dir() / LOG_FILE)
        return cls(file_path=file_path)


def _handlers(cfg: LoggingConfig) -> list[logging.Handler]:
    Path(cfg.file_path).parent.mkdir(parents=True, exist_ok=True)
    to_file = RotatingFileHandler(
        cfg.file_path, maxBytes=cfg.max_bytes, backupCount=cfg.backup_count, encoding="utf-8"
    )
    to_file.setLevel(cfg.file_level)
    to_file.setFormatter(logging.Formatter(cfg.file_fmt, cfg.datefmt))

    to_console = logging.StreamHandler(sys.stderr)
    to_console.setLevel(cfg.console_level)
    to_console.setFormatter(logging.Formatter(cfg.console_fmt, cfg.datefmt))
    return [to_file, to_console]


def _install(cfg: LoggingConfig) -> None:
    package = logging.getLogger(PACKAGE_LOGGER)
    for old in list(package.handlers):
        package.removeHandler(old)
        old.close()
    for handler in _handlers(cfg):
        package.addHandler(handler)
    package.setLevel(min(cfg.file_level, cfg.console_level))
    package.propagate = False


def init_logging(
    file_path: Optional[str] = None,
    file_level: int = logging.INFO,
    console_level: int = logging.WARNING,
    force: bool = False,
) -> LoggingConfig:
    """
    Install the package handlers once.

    A second call returns the active configuration unless force=True.
    """
    global _ACTIVE
    with _LOCK:
        if _ACTIVE is not None and not force:
            return _ACTIVE
        cfg = replace(LoggingConfig.default(file_path), file_level=file_level, console_level=console_level)
        _install(cfg)
        _ACTIVE = cfg
    logging.getLogger(__name__).info(
        "logging to %s (file %s, console %s)",
        cfg.file_path,
        logging.getLevelName(cfg.file_level),
        logging.getLevelName(cfg.console_level),
    )
    return cfg


def reconfigure_logging(
    file_path: Optional[str] = None,
    file_level: Optional[int] = None,
    console_level: Optional[int] = None,
) -> LoggingConfig:
    """Re-install the handlers, overriding only the arguments that are not None."""
    base = _ACTIVE or LoggingConfig.default()
    return init_logging(
        file_path=base.file_path if file_path is None else file_path,
        file_level=base.file_level if file_level is None else file_level,
        console_level=base.console_level if console_level is None else console_level,
        force=True,
    )


def get_logger(name: str) -> logging.Logger:
    if _ACTIVE is None:
        init_logging()
    return logging.getLogger(name)


def is_logging_initialized() -> bool:
    return _ACTIVE is not None


init_logging()
