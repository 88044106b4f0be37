"""
Constructores de datos de prueba compartidos por los tests.
"""

import math

import numpy as np

from app.domain.entities import BeamPowerTable, NetworkScenario
from app.domain.value_objects import Area


def build_scenario(**overrides) -> NetworkScenario:
    """Escenario pequeño por defecto: 2 BS, N=2, lambda' ~ 4 m, 36 celdas de 1 m."""
    params = {
        "bs_positions": [(0.0, 0.0), (6.0, 6.0)],
        "bs_powers_dbm": [0.0, 0.0],
        "num_antennas": 2,
        "carrier_freq_hz": 7.5e9,
        "wavelength_scale": 100.0,
        "noise_power_dbm": -95.0,
        "area": Area.square(6.0),
        "grid_step_m": 1.0,
    }
    params.update(overrides)
    return NetworkScenario.create(**params)


def reference_scenario(**overrides) -> NetworkScenario:
    """Equivalente a configs/reference.toml."""
    params = {
        "bs_positions": [(0.0, 0.0), (100.0, 0.0), (100.0, 100.0), (0.0, 100.0)],
        "bs_powers_dbm": [0.0] * 4,
        "num_antennas": 4,
        "carrier_freq_hz": 7.5e9,
        "wavelength_scale": 100.0,
        "noise_power_dbm": -95.0,
        "area": Area.square(100.0),
        "grid_step_m": 1.0,
        "calibration_knee_db": 5.0,
    }
    params.update(overrides)
    return NetworkScenario.create(**params)


def make_table(
    powers, closest=None, noise_mw: float = 1.0, amplitudes=None
) -> BeamPowerTable:
    """
    BeamPowerTable a partir de potencias (B, M, G) arbitrarias.

    Sin amplitudes explícitas usa sqrt(potencia): todas las BS llegan en fase.
    """
    powers = np.array(powers, dtype=np.float64)
    if closest is None:
        closest = np.zeros(powers.shape[2], dtype=np.int64)
    if amplitudes is None:
        amplitudes = np.sqrt(powers).astype(np.complex128)
    return BeamPowerTable(
        powers=powers,
        closest=np.array(closest, dtype=np.int64),
        noise_mw=noise_mw,
        amplitudes=np.array(amplitudes, dtype=np.complex128),
    )


def db(value: float) -> float:
    return 10.0 * math.log10(value)


SMALL_TOML = """
bs_positions = [[0.0, 0.0], [6.0, 6.0]]
bs_powers_dbm = [0.0, 0.0]

[radio]
carrier_freq_hz = 7.5e9
wavelength_scale = 100.0
noise_power_dbm = -95.0

[array]
num_antennas = 2

[area]
x_min = 0.0
y_min = 0.0
x_max = 6.0
y_max = 6.0

[grid]
step_m = 1.0
"""


def ring_table() -> BeamPowerTable:
    """
    B=4, M=1, G=4: en la celda g dominan las BS g+1 y g+2 (mod 4).

    La celda 0 recibe además 0.04 de la BS 3, por debajo de alpha=0.5.
    """
    powers = [
        [[1.0, 0.0, 0.0, 1.0]],
        [[1.0, 1.0, 0.0, 0.0]],
        [[0.04, 1.0, 1.0, 0.0]],
        [[0.0, 0.0, 1.0, 1.0]],
    ]
    return make_table(powers, closest=[0, 1, 2, 3])
