"""
Integration tests for the export mappers.
"""

import numpy as np
import pytest

from app.domain.entities import CoverageReport, JointBeamPlan, PlanScheme, make_grid
from app.domain.services import make_phase_book
from app.infrastructure.mappers import (
    CoverageReportMapper,
    GridValuesMapper,
    HeatmapMapper,
    PlanMapper,
    ScenarioMapper,
    scenario_hash,
)
from tests.fixtures.builders import build_scenario


@pytest.fixture
def grid():
    return make_grid(build_scenario())


@pytest.mark.integration
class TestGridMappers:
    """Test per-cell exports."""

    def test_grid_values_columns(self, grid):
        frame = GridValuesMapper("delta_db").to_persistence((grid, np.zeros(grid.size)))

        assert list(frame.columns) == ["x_m", "y_m", "delta_db"]
        assert len(frame) == 36
        assert (frame.x_m.iloc[0], frame.y_m.iloc[0]) == (0.5, 0.5)

    def test_heatmap_north_up(self, grid):
        """Should put the highest y row on top and brightest on the max value."""
        values = np.arange(grid.size, dtype=np.float64)

        image = HeatmapMapper().to_persistence((grid, values))

        assert image.shape == (6, 6, 3)
        assert image.dtype == np.uint8
        assert image[0, 5, 0] == 255
        assert image[5, 0, 0] == 32

    def test_heatmap_silent_cells_black(self, grid):
        values = np.full(grid.size, 3.0)
        values[0] = -np.inf

        image = HeatmapMapper().to_persistence((grid, values))

        assert image[5, 0, 0] == 0
        assert image[0, 0, 0] == 32


@pytest.mark.integration
class TestReportMappers:
    """Test coverage and plan exports."""

    def test_coverage_columns(self):
        report = CoverageReport(
            thresholds_db=(0.0, 1.0),
            curves={"independent": (1.0, 0.5), "joint_fixed": (1.0, 0.75)},
        )

        frame = CoverageReportMapper().to_persistence(report)

        assert list(frame.columns) == ["threshold_db", "cov_independent", "cov_joint"]

    def test_plan_text(self):
        """Should print one row per tuple with phases in units of pi."""
        book = make_phase_book(2)
        plan = JointBeamPlan(
            tuples=((0, 1), (1, 0)),
            reps_per_tuple=(2, 1),
            active_sets=((1, 2), (2,)),
            phase_books=(book, make_phase_book(1)),
            num_beams=2,
            scheme=PlanScheme.ENHANCED,
            alpha=0.1,
        )

        lines = PlanMapper().to_persistence(plan).splitlines()

        assert "# total_transmissions: 3" in lines
        assert "# alpha: 0.1" in lines
        assert lines[6] == "tuple\tBS1\tBS2\treps\tactive\tphase_rows"
        assert lines[7] == "0\t0\t1\t2\t1,2\t(0,0) (0,1)"
        assert lines[8] == "1\t-\t0\t1\t2\t(0)"


@pytest.mark.integration
class TestScenarioMapper:
    """Test the canonical scenario document."""

    def test_round_trip(self):
        scenario = build_scenario(calibration_knee_db=5.0)
        mapper = ScenarioMapper()

        assert mapper.to_domain(mapper.to_persistence(scenario)) == scenario

    def test_hash_stable(self):
        """Should depend on content only."""
        first = scenario_hash(build_scenario())

        assert first == scenario_hash(build_scenario())
        assert len(first) == 64
        assert first != scenario_hash(build_scenario(noise_power_dbm=-90.0))
