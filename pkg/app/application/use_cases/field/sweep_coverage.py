"""
Sweep Coverage Use Case.

Coverage probability versus reference SNR for every scheme.
"""

from app.application.dto import SweepCoverageRequest, SweepCoverageResponse
from app.application.services import plan_joint_beams, prepare_simulation
from app.domain.entities import SnrScheme
from app.domain.exceptions import InvalidValueError
from app.domain.services import snr_field, threshold_sweep
from app.shared.interfaces import IUseCase


class SweepCoverageUseCase(IUseCase[SweepCoverageRequest, SweepCoverageResponse]):
    """
    Use case for the coverage-versus-threshold curves.

    Curves: independent (matched to the fixed scheme), joint_fixed and,
    when alpha is given, joint_enhanced.
    """

    def execute(self, request: SweepCoverageRequest) -> SweepCoverageResponse:
        """
        Raises:
            InvalidValueError: If thresholds are not strictly increasing
        """
        thresholds = list(request.thresholds_db)
        if any(b <= a for a, b in zip(thresholds, thresholds[1:])):
            raise InvalidValueError("thresholds", "must be strictly increasing")

        context = prepare_simulation(request.scenario, request.options)
        plans = plan_joint_beams(
            context,
            request.gamma_ref_db,
            request.options,
            alpha=request.alpha,
            n_select=request.n_select,
        )
        fields = [
            snr_field(context.table, plans.fixed, SnrScheme.INDEPENDENT, request.policy),
            snr_field(context.table, plans.fixed, SnrScheme.JOINT_FIXED),
        ]
        if plans.enhanced is not None:
            fields.append(
                snr_field(context.table, plans.enhanced, SnrScheme.JOINT_ENHANCED)
            )
        return SweepCoverageResponse(
            report=threshold_sweep(fields, thresholds),
            calibration_offset_db=context.calibration_offset_db,
        )
