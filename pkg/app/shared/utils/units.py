"""
Unit conversions.

All SNR arithmetic is done in linear units; dB only appears at the
presentation boundary.
"""

import numpy as np
from scipy import constants

from app.shared.types import FloatArray

SPEED_OF_LIGHT = constants.c


def dbm_to_mw(value_dbm: float) -> float:
    """Convert a power in dBm to milliwatts."""
    return float(10.0 ** (value_dbm / 10.0))


def db_to_linear(value_db: float) -> float:
    return float(10.0 ** (value_db / 10.0))


def linear_to_db(values: FloatArray | float) -> FloatArray:
    """
    Convert linear power ratios to dB.

    Exact zeros map to -inf without emitting a warning.
    """
    with np.errstate(divide="ignore"):
        return np.asarray(10.0 * np.log10(values), dtype=np.float64)


def wavelength_m(carrier_freq_hz: float, scale: float = 1.0) -> float:
    """Wavelength for a carrier frequency, multiplied by ``scale``."""
    return float(scale * SPEED_OF_LIGHT / carrier_freq_hz)
