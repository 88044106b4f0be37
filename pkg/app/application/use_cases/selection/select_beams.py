"""
Select Beams Use Case.

Greedy selection of the joint beam tuples only.
"""

import logging

from app.application.dto import SelectBeamsRequest, SelectBeamsResponse
from app.application.services import plan_joint_beams, prepare_simulation
from app.shared.interfaces import IUseCase

logger = logging.getLogger(__name__)


class SelectBeamsUseCase(IUseCase[SelectBeamsRequest, SelectBeamsResponse]):
    """
    Use case for selecting N^Joint joint beam tuples.

    Business Rules:
    - Coverage of a tuple is judged on the all-BS phase-combined SNR
    - Greedy picks continue at zero marginal gain until n_select tuples exist
    """

    def execute(self, request: SelectBeamsRequest) -> SelectBeamsResponse:
        """
        Execute the use case.

        Raises:
            InvalidValueError: If n_select exceeds N^B
        """
        context = prepare_simulation(request.scenario, request.options)
        plans = plan_joint_beams(
            context,
            request.gamma_ref_db,
            request.options,
            n_select=request.n_select,
        )
        return SelectBeamsResponse(
            plan=plans.fixed,
            trace=plans.trace,
            calibration_offset_db=context.calibration_offset_db,
        )
