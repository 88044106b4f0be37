from .coverage_report_mapper import CoverageReportMapper, coverage_table
from .fringe_profile_mapper import FringeProfileMapper
from .grid_values_mapper import GridValuesMapper, HeatmapMapper
from .plan_mapper import PlanMapper
from .scenario_mapper import ScenarioMapper, scenario_hash
from .summary_mapper import CompareSummary, DeltaSummary, SummaryMapper

__all__ = [
    "ScenarioMapper",
    "scenario_hash",
    "GridValuesMapper",
    "HeatmapMapper",
    "CoverageReportMapper",
    "coverage_table",
    "FringeProfileMapper",
    "PlanMapper",
    "SummaryMapper",
    "CompareSummary",
    "DeltaSummary",
]
