"""
Compute Field Use Case.

Absolute SNR of one scheme over the whole grid.
"""

from app.application.dto import ComputeFieldRequest, ComputeFieldResponse
from app.application.services import plan_joint_beams, prepare_simulation
from app.domain.entities import SnrScheme
from app.domain.services import snr_field
from app.shared.interfaces import IUseCase


class ComputeFieldUseCase(IUseCase[ComputeFieldRequest, ComputeFieldResponse]):
    """
    Use case for evaluating a single SNR field.

    The joint plan is always selected first: the independent baseline needs it
    for its repetition count and, under the serving policy, for its beams.
    """

    def execute(self, request: ComputeFieldRequest) -> ComputeFieldResponse:
        context = prepare_simulation(request.scenario, request.options)
        enhanced = request.scheme is SnrScheme.JOINT_ENHANCED
        plans = plan_joint_beams(
            context,
            request.gamma_ref_db,
            request.options,
            alpha=request.alpha if enhanced else None,
            n_select=request.n_select,
        )
        plan = plans.enhanced if plans.enhanced is not None else plans.fixed
        field = snr_field(context.table, plan, request.scheme, request.policy)
        return ComputeFieldResponse(
            field=field,
            grid=context.grid,
            plan=plan,
            calibration_offset_db=context.calibration_offset_db,
        )
