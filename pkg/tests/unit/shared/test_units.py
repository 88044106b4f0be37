"""
Tests for unit conversions.
"""

import numpy as np
import pytest

from app.shared.utils import db_to_linear, dbm_to_mw, linear_to_db, wavelength_m


@pytest.mark.unit
class TestUnits:
    """Test dB / linear helpers."""

    def test_dbm_to_mw(self):
        assert dbm_to_mw(0.0) == 1.0
        assert dbm_to_mw(-30.0) == pytest.approx(1e-3)

    def test_db_round_trip_value(self):
        assert db_to_linear(10.0) == pytest.approx(10.0)

    def test_zero_is_minus_infinity(self):
        """Should map exact zeros to -inf without warnings."""
        values = linear_to_db(np.array([0.0, 100.0]))

        assert values[0] == -np.inf
        assert values[1] == pytest.approx(20.0)

    def test_wavelength(self):
        """Should scale c / f."""
        assert wavelength_m(7.5e9, 100.0) == pytest.approx(3.99723, rel=1e-5)
