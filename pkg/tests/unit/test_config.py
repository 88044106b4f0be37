# tests/unit/test_config.py
"""
Tests para la configuración de la aplicación.
"""

from pathlib import Path

import pytest

from app.config.settings import Settings


def test_settings_creation():
    """Test: Settings se puede crear correctamente"""
    settings = Settings()
    assert settings is not None
    assert hasattr(settings, "OUTPUT_DIR")
    assert hasattr(settings, "PROJECT_NAME")


def test_settings_defaults():
    """Test: Settings tiene valores por defecto"""
    settings = Settings()
    assert settings.ENVIRONMENT in ["development", "test", "production"]
    assert isinstance(settings.DEBUG, bool)
    assert settings.DEFAULT_GAMMA_REF_DB == 10.0
    assert settings.DEFAULT_ALPHA == 0.1
    assert settings.FRINGE_SAMPLES_PER_WAVELENGTH == 128


def test_output_dir_from_environment(monkeypatch):
    """Test: SSBCOV_OUTPUT_DIR fija el directorio de salida por defecto"""
    monkeypatch.setenv("SSBCOV_OUTPUT_DIR", "/tmp/ssbcov-out")
    monkeypatch.setenv("SSBCOV_THREADS", "3")
    settings = Settings()

    assert settings.OUTPUT_DIR == Path("/tmp/ssbcov-out")
    assert settings.THREADS == 3


def test_memory_budget_bytes():
    """Test: el presupuesto de memoria se convierte a bytes"""
    settings = Settings(CHANNEL_MEMORY_BUDGET_MB=1.5)
    assert settings.channel_memory_budget_bytes == 1572864


@pytest.mark.parametrize(
    "env,expected",
    [
        ("development", True),
        ("test", True),
        ("production", False),
    ],
)
def test_settings_debug_by_environment(env, expected):
    """Test: DEBUG se configura según el entorno"""
    settings = Settings(ENVIRONMENT=env)
    assert expected == settings.DEBUG
