"""
Simulation DTOs.

Request/response containers for the simulation use cases. Responses carry
domain entities; serialization happens in the infrastructure mappers.
"""

from dataclasses import dataclass, field

import numpy as np

from app.domain.entities import (
    CoverageReport,
    GreedyTrace,
    Grid,
    IndependentBeamPolicy,
    JointBeamPlan,
    NetworkScenario,
    SnrField,
    SnrScheme,
)
from app.domain.value_objects import PhaseBook
from app.shared.types import FloatArray


@dataclass
class SimulationOptions:
    """Execution knobs that never change results."""

    threads: int = 1
    memory_budget_bytes: int | None = None
    cell_block_size: int = 4096
    tuple_block_size: int = 64


@dataclass
class SelectBeamsRequest:
    scenario: NetworkScenario
    gamma_ref_db: float
    n_select: int | None = None
    options: SimulationOptions = field(default_factory=SimulationOptions)


@dataclass
class SelectBeamsResponse:
    plan: JointBeamPlan
    trace: GreedyTrace
    calibration_offset_db: float


@dataclass
class ComputeFieldRequest:
    scenario: NetworkScenario
    scheme: SnrScheme
    gamma_ref_db: float
    alpha: float
    policy: IndependentBeamPolicy = IndependentBeamPolicy.SERVING
    n_select: int | None = None
    options: SimulationOptions = field(default_factory=SimulationOptions)


@dataclass
class ComputeFieldResponse:
    field: SnrField
    grid: Grid
    plan: JointBeamPlan
    calibration_offset_db: float


@dataclass
class CompareSchemesRequest:
    """Enhanced scheme is evaluated only when ``alpha`` is given."""

    scenario: NetworkScenario
    gamma_ref_db: float
    alpha: float | None = None
    policy: IndependentBeamPolicy = IndependentBeamPolicy.SERVING
    n_select: int | None = None
    options: SimulationOptions = field(default_factory=SimulationOptions)


@dataclass
class DeltaStatistics:
    """Summary of a relative gain map (finite cells only)."""

    max_db: float
    min_db: float
    mean_db: float
    argmax_x_m: float
    argmax_y_m: float
    finite_cells: int

    @staticmethod
    def from_map(delta: FloatArray, grid: Grid) -> "DeltaStatistics":
        finite = np.isfinite(delta)
        if not np.any(finite):
            nan = float("nan")
            return DeltaStatistics(nan, nan, nan, nan, nan, 0)
        masked = np.where(finite, delta, -np.inf)
        best = int(np.argmax(masked))
        x, y = grid.cell(best)
        return DeltaStatistics(
            max_db=float(delta[best]),
            min_db=float(np.min(delta[finite])),
            mean_db=float(np.mean(delta[finite])),
            argmax_x_m=x,
            argmax_y_m=y,
            finite_cells=int(np.count_nonzero(finite)),
        )


@dataclass
class CompareSchemesResponse:
    grid: Grid
    fixed_plan: JointBeamPlan
    trace: GreedyTrace
    fields: dict[str, SnrField]
    delta_fixed: FloatArray
    delta_fixed_stats: DeltaStatistics
    calibration_offset_db: float
    gamma_ref_db: float
    enhanced_plan: JointBeamPlan | None = None
    delta_enhanced: FloatArray | None = None
    delta_enhanced_stats: DeltaStatistics | None = None


@dataclass
class SweepCoverageRequest:
    scenario: NetworkScenario
    thresholds_db: list[float]
    gamma_ref_db: float
    alpha: float | None = None
    policy: IndependentBeamPolicy = IndependentBeamPolicy.SERVING
    n_select: int | None = None
    options: SimulationOptions = field(default_factory=SimulationOptions)


@dataclass
class SweepCoverageResponse:
    report: CoverageReport
    calibration_offset_db: float


@dataclass
class TraceFringeRequest:
    scenario: NetworkScenario
    samples_per_wavelength: int = 128
    beam_index: int = 0
    options: SimulationOptions = field(default_factory=SimulationOptions)


@dataclass
class FringeProfile:
    """
    SNR along the BS1-BS2 line.

    Attributes:
        positions_m: (P,) distance from BS 1
        phase_snr_db: (P, R) SNR of each phase row
        combined_snr_db: (P,) SNR after summing all rows
        closed_form_snr_db: (P,) B * sum_b rho_b |h_b^H f_b|^2 / N0
    """

    positions_m: FloatArray
    phase_snr_db: FloatArray
    combined_snr_db: FloatArray
    closed_form_snr_db: FloatArray
    combined_snr: FloatArray
    closed_form_snr: FloatArray
    phase_book: PhaseBook
    calibration_offset_db: float
