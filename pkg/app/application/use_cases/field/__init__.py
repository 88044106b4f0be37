"""
Field Use Cases Module.

Contains the grid-wide pipelines: absolute fields, scheme comparison and
coverage sweeps.
"""

from .compare_schemes import INDEPENDENT_ENHANCED_LABEL, CompareSchemesUseCase
from .compute_field import ComputeFieldUseCase
from .sweep_coverage import SweepCoverageUseCase

__all__ = [
    "ComputeFieldUseCase",
    "CompareSchemesUseCase",
    "SweepCoverageUseCase",
    "INDEPENDENT_ENHANCED_LABEL",
]
