# tests/conftest.py
"""
Configuración global de pytest.
Este archivo se ejecuta antes de todos los tests.
"""

from pathlib import Path

import numpy as np
import pytest

from app.application.dto import CompareSchemesRequest, SimulationOptions
from app.application.services import prepare_simulation
from app.application.use_cases import CompareSchemesUseCase
from app.config.settings import Settings
from app.domain.entities import BeamPowerTable, NetworkScenario
from tests.fixtures.builders import (
    SMALL_TOML,
    build_scenario,
    make_table,
    reference_scenario as build_reference_scenario,
)

ROOT = Path(__file__).resolve().parents[1]

# ==================== FIXTURES DE CONFIGURACIÓN ====================


@pytest.fixture(scope="session")
def test_settings() -> Settings:
    """Settings de prueba."""
    return Settings(ENVIRONMENT="test", LOG_LEVEL="DEBUG")


@pytest.fixture(scope="session")
def reference_config_path() -> Path:
    """Configuración de referencia: 4 BS en las esquinas de 100 m x 100 m."""
    return ROOT / "configs" / "reference.toml"


@pytest.fixture(scope="session")
def fringe_config_path() -> Path:
    """Configuración de dos BS enfrentadas a 100 m."""
    return ROOT / "configs" / "two_bs_fringe.toml"


@pytest.fixture
def small_config_path(tmp_path) -> Path:
    """TOML del escenario pequeño escrito en un directorio temporal."""
    path = tmp_path / "small.toml"
    path.write_text(SMALL_TOML, encoding="utf-8")
    return path


# ==================== FIXTURES DE ESCENARIOS ====================


@pytest.fixture
def small_scenario() -> NetworkScenario:
    """2 BS, N=2, 36 celdas."""
    return build_scenario()


@pytest.fixture(scope="session")
def reference_scenario() -> NetworkScenario:
    return build_reference_scenario()


@pytest.fixture(scope="session")
def reference_context(reference_scenario):
    """Tabla de potencias calibrada del escenario de referencia."""
    return prepare_simulation(reference_scenario, SimulationOptions(threads=2))


@pytest.fixture(scope="session")
def reference_comparison(reference_scenario):
    """Comparación fija + mejorada (alpha=0.1) del escenario de referencia."""
    return CompareSchemesUseCase().execute(
        CompareSchemesRequest(
            scenario=reference_scenario,
            gamma_ref_db=10.0,
            alpha=0.1,
            options=SimulationOptions(threads=2),
        )
    )


# ==================== FIXTURES DE TABLAS SINTÉTICAS ====================


@pytest.fixture
def two_bs_table() -> BeamPowerTable:
    """
    B=2, M=2, G=4.

    Tuple (0, 0) cubre las celdas 0-1 y (1, 1) las celdas 2-3.
    """
    powers = [
        [[10.0, 10.0, 0.0, 0.0], [0.0, 0.0, 10.0, 10.0]],
        [[10.0, 10.0, 0.0, 0.0], [0.0, 0.0, 10.0, 10.0]],
    ]
    return make_table(powers, closest=[0, 0, 1, 1])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


# ==================== HOOKS DE PYTEST ====================


def pytest_configure(config):
    """
    Hook que se ejecuta al inicio de pytest.
    Aquí puedes configurar variables de entorno, etc.
    """
    import os

    os.environ["ENVIRONMENT"] = "test"
