"""
Tests for SnrField and CoverageReport Entities.
"""

import numpy as np
import pytest

from app.domain.entities import CoverageReport, SnrField, SnrScheme
from app.domain.exceptions import EmptyInputError, InvalidValueError
from app.domain.value_objects import ResourceBudget

BUDGET = ResourceBudget(4, 4, 4.0)


def field(values, scheme=SnrScheme.JOINT_FIXED, label=""):
    values = np.asarray(values, dtype=np.float64)
    return SnrField(
        scheme=scheme,
        values_db=values,
        budget=BUDGET,
        repetitions=np.full(values.shape, 4.0),
        label=label,
    )


@pytest.mark.unit
class TestSnrField:
    """Test SnrField validation."""

    def test_label_defaults_to_scheme(self):
        """Should use the scheme value as label."""
        assert field([1.0]).label == "joint_fixed"
        assert field([1.0], label="x").label == "x"

    def test_negative_infinity_allowed(self):
        """Should allow cells without signal."""
        assert field([-np.inf, 3.0]).size == 2

    @pytest.mark.parametrize("bad", [np.nan, np.inf])
    def test_nan_and_positive_infinity_rejected(self, bad):
        """Should reject NaN and +inf."""
        with pytest.raises(InvalidValueError):
            field([bad])


@pytest.mark.unit
class TestCoverageReport:
    """Test CoverageReport validation."""

    def test_fraction_lookup(self):
        """Should return the coverage of a curve at a threshold."""
        report = CoverageReport((0.0, 5.0), {"joint_fixed": (1.0, 0.5)})

        assert report.labels == ["joint_fixed"]
        assert report.fraction("joint_fixed", 5.0) == 0.5

    def test_empty_report(self):
        """Should need thresholds and curves."""
        with pytest.raises(EmptyInputError):
            CoverageReport((), {"a": ()})
        with pytest.raises(EmptyInputError):
            CoverageReport((1.0,), {})

    def test_increasing_curve_rejected(self):
        """Should keep curves nonincreasing."""
        with pytest.raises(InvalidValueError):
            CoverageReport((0.0, 1.0), {"a": (0.5, 0.6)})

    def test_unsorted_thresholds_rejected(self):
        """Should need strictly increasing thresholds."""
        with pytest.raises(InvalidValueError):
            CoverageReport((5.0, 3.0), {"a": (0.5, 0.5)})
