"""
DTOs (Data Transfer Objects) Module.

Contains the scenario document schema and the request/response DTOs of the
simulation use cases.
"""

from .scenario_dto import AreaDocument, ScenarioDocument
from .simulation_dto import (
    CompareSchemesRequest,
    CompareSchemesResponse,
    ComputeFieldRequest,
    ComputeFieldResponse,
    DeltaStatistics,
    FringeProfile,
    SelectBeamsRequest,
    SelectBeamsResponse,
    SimulationOptions,
    SweepCoverageRequest,
    SweepCoverageResponse,
    TraceFringeRequest,
)

__all__ = [
    # Scenario
    "ScenarioDocument",
    "AreaDocument",
    # Simulation
    "SimulationOptions",
    "SelectBeamsRequest",
    "SelectBeamsResponse",
    "ComputeFieldRequest",
    "ComputeFieldResponse",
    "CompareSchemesRequest",
    "CompareSchemesResponse",
    "DeltaStatistics",
    "SweepCoverageRequest",
    "SweepCoverageResponse",
    "TraceFringeRequest",
    "FringeProfile",
]
