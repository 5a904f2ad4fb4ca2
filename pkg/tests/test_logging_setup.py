import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path

from src.zpc.logging_setup import (PACKAGE_LOGGER, LoggingConfig, get_logger,
                                   init_logging, is_logging_initialized,
                                   reconfigure_logging)


def test_logging_is_initialized_on_import():
    assert is_logging_initialized()
    package = logging.getLogger(PACKAGE_LOGGER)
    assert any(isinstance(h, RotatingFileHandler) for h in package.handlers)
    assert any(type(h) is logging.StreamHandler for h in package.handlers)
    assert package.propagate is False


def test_default_config_follows_env(monkeypatch, tmp_path):
    monkeypatch.setenv("ZPC_LOG_DIR", str(tmp_path / "logs"))
    cfg = LoggingConfig.default()
    assert Path(cfg.file_path) == tmp_path / "logs" / "zpc.log"
    assert cfg.console_level == logging.WARNING


def test_root_logger_is_left_alone():
    root_handlers = list(logging.getLogger().handlers)
    reconfigure_logging()
    assert logging.getLogger().handlers == root_handlers


def test_reconfigure_writes_to_new_file(tmp_path):
    previous = init_logging()
    target = tmp_path / "run.log"
    try:
        cfg = reconfigure_logging(file_path=str(target), console_level=logging.ERROR)
        assert cfg.console_level == logging.ERROR
        assert cfg.file_level == previous.file_level
        get_logger("src.zpc.pair_correlation").info("pair sum done")
        for handler in logging.getLogger(PACKAGE_LOGGER).handlers:
            handler.flush()
        assert "pair sum done" in target.read_text(encoding="utf-8")
        assert init_logging() is cfg
    finally:
        init_logging(
            file_path=previous.file_path,
            file_level=previous.file_level,
            console_level=previous.console_level,
            force=True,
        )
