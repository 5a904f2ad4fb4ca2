"""
Fixtures pytest partagées.

Les zéros et le crible sont calculés une seule fois par session; les
journaux et le cache vont dans des répertoires temporaires.
"""

import os
import tempfile

# Avant tout import de src.zpc: le logging s'initialise à l'import
os.environ.setdefault("ZPC_LOG_DIR", tempfile.mkdtemp(prefix="zpc-logs-"))

import pytest

from src.zpc.prime_arith import sieve_lambda
from src.zpc.zeta_zeros import ZeroSet, find_zeros


@pytest.fixture(scope="session")
def zeros_2000():
    return find_zeros(2000.0)


@pytest.fixture(scope="session")
def zeros_500(zeros_2000):
    return zeros_2000.restrict(500.0)


@pytest.fixture(scope="session")
def zeros_100(zeros_2000):
    return zeros_2000.restrict(100.0)


@pytest.fixture(scope="session")
def sieve_1e6():
    return sieve_lambda(1_000_000)


@pytest.fixture
def synthetic_zeros():
    """Deux ordonnées {1, 2}, complètes jusqu'à 3."""
    return ZeroSet.from_ordinates([1.0, 2.0], t_max=3.0)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    """ZPC_CACHE_DIR pointant vers un répertoire temporaire."""
    path = tmp_path / "cache"
    monkeypatch.setenv("ZPC_CACHE_DIR", str(path))
    return path
