"""
Tests for BeamPowerTable Entity.
"""

import numpy as np
import pytest

from app.domain.entities import BeamPowerTable
from app.domain.exceptions import (
    DimensionMismatchError,
    InvalidValueError,
    OutOfRangeError,
)
from tests.fixtures.builders import make_table


@pytest.mark.unit
class TestBeamPowerTable:
    """Test table accessors."""

    def test_shape_properties(self, two_bs_table):
        """Should expose B, M, G and M^B."""
        assert two_bs_table.num_bs == 2
        assert two_bs_table.num_beams == 2
        assert two_bs_table.num_cells == 4
        assert two_bs_table.tuple_count == 4

    def test_combined_power(self, two_bs_table):
        """Should sum the per-BS powers of a tuple."""
        np.testing.assert_array_equal(
            two_bs_table.combined_power((0, 0)), [20.0, 20.0, 0.0, 0.0]
        )
        np.testing.assert_array_equal(
            two_bs_table.combined_power((0, 1), members=(2,)), [0.0, 0.0, 10.0, 10.0]
        )

    def test_tuple_terms(self, two_bs_table):
        """Should stack per-BS powers as (B, G)."""
        assert two_bs_table.tuple_terms((1, 0)).shape == (2, 4)

    def test_closest_terms_and_best(self):
        """Should pick the closest BS's power for the requested beam."""
        table = make_table(
            [[[1.0, 5.0], [3.0, 2.0]], [[7.0, 0.5], [4.0, 9.0]]], closest=[0, 1]
        )

        np.testing.assert_array_equal(table.closest_terms(np.array([1, 0])), [3.0, 0.5])
        np.testing.assert_array_equal(table.best_closest_power(), [3.0, 9.0])

    def test_bad_tuple_width(self, two_bs_table):
        """Should need one beam per BS."""
        with pytest.raises(DimensionMismatchError):
            two_bs_table.combined_power((0,))

    def test_bad_beam_index(self, two_bs_table):
        """Should reject beams outside the codebook."""
        with pytest.raises(OutOfRangeError):
            two_bs_table.tuple_terms((0, 2))

    def test_with_noise(self, two_bs_table):
        """Should return a copy with another noise power."""
        assert two_bs_table.with_noise(2.0).noise_mw == 2.0
        assert two_bs_table.noise_mw == 1.0

    def test_tuple_amplitudes(self):
        """Should pick the complex amplitudes of the requested BSs."""
        amplitudes = np.array([[[1.0 + 1.0j]], [[2.0j]]])
        table = make_table([[[2.0]], [[4.0]]], amplitudes=amplitudes)

        np.testing.assert_array_equal(
            table.tuple_amplitudes((0, 0)), [[1.0 + 1.0j], [2.0j]]
        )
        np.testing.assert_array_equal(table.tuple_amplitudes((0, 0), (2,)), [[2.0j]])

    def test_powers_only_table(self, two_bs_table):
        """Should refuse amplitudes it was not given."""
        table = BeamPowerTable(
            powers=two_bs_table.powers,
            closest=two_bs_table.closest,
            noise_mw=two_bs_table.noise_mw,
        )

        with pytest.raises(InvalidValueError):
            table.tuple_amplitudes((0, 0))

    def test_amplitude_shape_checked(self):
        with pytest.raises(DimensionMismatchError):
            make_table([[[1.0, 1.0]]], amplitudes=[[[1.0]]])
