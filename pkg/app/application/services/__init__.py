from .beam_planning import BeamPlans, plan_joint_beams
from .scenario_builder import build_scenario
from .simulation_context import (
    SimulationContext,
    prepare_simulation,
    resolve_calibration_offset,
)

__all__ = [
    "build_scenario",
    "SimulationContext",
    "prepare_simulation",
    "resolve_calibration_offset",
    "BeamPlans",
    "plan_joint_beams",
]
