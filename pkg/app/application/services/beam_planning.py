"""
Joint beam planning shared by the pipelines.
"""

from dataclasses import dataclass

from app.application.dto import SimulationOptions
from app.domain.entities import GreedyTrace, JointBeamPlan
from app.domain.services import enhanced_plan, greedy_select

from .simulation_context import SimulationContext


@dataclass(frozen=True)
class BeamPlans:
    fixed: JointBeamPlan
    trace: GreedyTrace
    enhanced: JointBeamPlan | None = None


def plan_joint_beams(
    context: SimulationContext,
    gamma_ref_db: float,
    options: SimulationOptions,
    alpha: float | None = None,
    n_select: int | None = None,
) -> BeamPlans:
    """Greedy fixed plan, plus the enhanced plan when ``alpha`` is given."""
    count = context.n_joint if n_select is None else n_select
    fixed, trace = greedy_select(
        context.table,
        gamma_ref_db,
        count,
        threads=options.threads,
        block_size=options.tuple_block_size,
    )
    enhanced = None if alpha is None else enhanced_plan(context.table, fixed, alpha)
    return BeamPlans(fixed=fixed, trace=trace, enhanced=enhanced)
