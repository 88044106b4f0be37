"""
Use Cases Module.

Contains all application use cases following Clean Architecture.

Use cases run the simulation pipelines and orchestrate the flow between the
domain services and the presentation layer.

Organization:
- selection/: greedy joint beam selection
- field/: SNR fields, scheme comparison and coverage sweeps
- fringe/: two-BS interference profile
"""

from .field import CompareSchemesUseCase, ComputeFieldUseCase, SweepCoverageUseCase
from .fringe import TraceFringeUseCase
from .selection import SelectBeamsUseCase

__all__ = [
    "SelectBeamsUseCase",
    "ComputeFieldUseCase",
    "CompareSchemesUseCase",
    "SweepCoverageUseCase",
    "TraceFringeUseCase",
]
