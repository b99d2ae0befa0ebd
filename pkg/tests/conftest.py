from fractions import Fraction

import pytest

import settings
from utils import logging_setup
from core.catalog import journe, shannon
from core.construction import Params, WaveletSetBuilder


@pytest.fixture(autouse=True)
def _logs_in_tmp(tmp_path, monkeypatch):
    """Los logs de cada test van a un directorio temporal."""
    monkeypatch.setattr(settings, "LOGS_DIR", tmp_path / "logs")
    monkeypatch.setattr(logging_setup, "_CONFIGURED", False)


@pytest.fixture
def shannon_set():
    return shannon()


@pytest.fixture
def journe_set():
    return journe()


@pytest.fixture
def params_2():
    """n = 2, ε = π/5."""
    return Params.from_ratio(2, Fraction(1, 5))


@pytest.fixture
def builder_2(params_2):
    return WaveletSetBuilder(params_2)
