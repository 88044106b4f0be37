from pydantic import BaseModel, ConfigDict

from app.application.dto import CompareSchemesResponse, DeltaStatistics
from app.domain.services import coverage_probability
from app.shared.interfaces.mapper import IExportMapper


class DeltaSummary(BaseModel):
    max_db: float
    min_db: float
    mean_db: float
    max_location_m: tuple[float, float]
    finite_cells: int

    @classmethod
    def from_stats(cls, stats: DeltaStatistics) -> "DeltaSummary":
        return cls(
            max_db=stats.max_db,
            min_db=stats.min_db,
            mean_db=stats.mean_db,
            max_location_m=(stats.argmax_x_m, stats.argmax_y_m),
            finite_cells=stats.finite_cells,
        )


class CompareSummary(BaseModel):
    """Contents of summary.json."""

    num_bs: int
    n_ind: int
    n_joint: int
    gamma_ref_db: float
    snr_offset_db: float
    total_transmissions: dict[str, int]
    coverage_at_gamma_ref: dict[str, float]
    greedy_marginal_gains: list[int]
    delta: dict[str, DeltaSummary]

    model_config = ConfigDict(ser_json_inf_nan="strings")


class SummaryMapper(IExportMapper[CompareSchemesResponse, CompareSummary]):

    def to_persistence(self, domain_entity: CompareSchemesResponse) -> CompareSummary:
        response = domain_entity
        plan = response.fixed_plan
        transmissions = {"joint_fixed": plan.total_transmissions}
        delta = {"joint_fixed": DeltaSummary.from_stats(response.delta_fixed_stats)}
        if response.enhanced_plan is not None and response.delta_enhanced_stats:
            transmissions["joint_enhanced"] = response.enhanced_plan.total_transmissions
            delta["joint_enhanced"] = DeltaSummary.from_stats(
                response.delta_enhanced_stats
            )
        return CompareSummary(
            num_bs=plan.num_bs,
            n_ind=plan.num_beams,
            n_joint=plan.n_joint,
            gamma_ref_db=response.gamma_ref_db,
            snr_offset_db=response.calibration_offset_db,
            total_transmissions=transmissions,
            coverage_at_gamma_ref={
                label: coverage_probability(field, response.gamma_ref_db)
                for label, field in response.fields.items()
            },
            greedy_marginal_gains=list(response.trace.marginal_gains),
            delta=delta,
        )
