"""
Tests for NetworkScenario Entity.
"""

import math

import pytest

from app.domain.exceptions import InvalidValueError
from app.domain.value_objects import Area
from tests.fixtures.builders import build_scenario


@pytest.mark.unit
class TestNetworkScenarioCreation:
    """Test NetworkScenario.create defaults."""

    def test_scaled_wavelength(self, small_scenario):
        """Should multiply the carrier wavelength by the scale."""
        assert small_scenario.wavelength == pytest.approx(299792458.0 / 7.5e9 * 100.0)

    def test_default_boresight_points_at_centroid(self, small_scenario):
        """Should aim each array at the area centroid."""
        assert small_scenario.bs_boresight[0] == pytest.approx(math.pi / 4)
        assert small_scenario.bs_boresight[1] == pytest.approx(-3 * math.pi / 4)

    def test_default_grid_step_tiles_area(self):
        """Should snap lambda'/4 down to a step that tiles the area."""
        scenario = build_scenario(grid_step_m=None)
        cells = scenario.area.width / scenario.grid_step_m

        assert scenario.grid_step_m <= scenario.wavelength / 4
        assert cells == pytest.approx(round(cells))

    def test_joint_tuple_count_defaults_to_n(self, small_scenario):
        """Should default N^Joint to the codebook size."""
        assert small_scenario.joint_tuple_count == 2
        assert build_scenario(n_select=3).joint_tuple_count == 3

    def test_effective_noise(self, small_scenario):
        """Should fold the offset into the noise power."""
        assert small_scenario.effective_noise_mw(10.0) == pytest.approx(
            small_scenario.noise_mw / 10.0
        )


@pytest.mark.unit
class TestNetworkScenarioValidation:
    """Test NetworkScenario invariants."""

    def test_power_count_mismatch(self):
        """Should need one power per BS."""
        with pytest.raises(InvalidValueError):
            build_scenario(bs_powers_dbm=[0.0])

    def test_bs_outside_area(self):
        """Should keep BSs inside the area."""
        with pytest.raises(InvalidValueError):
            build_scenario(bs_positions=[(0.0, 0.0), (7.0, 6.0)])

    def test_step_not_below_wavelength(self):
        """Should require a step below the scaled wavelength."""
        with pytest.raises(InvalidValueError):
            build_scenario(area=Area.square(12.0), grid_step_m=6.0)

    def test_step_must_tile(self):
        """Should reject steps that do not tile the area."""
        with pytest.raises(InvalidValueError):
            build_scenario(grid_step_m=0.7)

    @pytest.mark.parametrize(
        "field,value",
        [
            ("num_antennas", 0),
            ("carrier_freq_hz", -1.0),
            ("noise_power_dbm", float("nan")),
            ("min_distance_m", 0.0),
            ("n_select", 0),
        ],
    )
    def test_invalid_values(self, field, value):
        """Should reject out-of-domain radio values."""
        with pytest.raises(InvalidValueError):
            build_scenario(**{field: value})
