"""
Domain Layer Module.

This module contains the core simulation model: the scenario, channels,
codebooks, SNR expressions, beam selection and coverage evaluation.
It is independent of the CLI, the file formats and the configuration layer.

The domain layer includes:
- Entities: scenario, grid, channel tables, plans, fields and reports
- Value Objects: immutable radio concepts (codebooks, phase books, budgets)
- Services: pure numerical operations over entities
- Exceptions: Domain-specific error types

For detailed documentation, see README.md in this directory.
"""

from .entities import (
    BeamPowerTable,
    ChannelField,
    ChannelVector,
    CoverageReport,
    GreedyTrace,
    Grid,
    IndependentBeamPolicy,
    JointBeamPlan,
    NetworkScenario,
    PlanScheme,
    RunManifest,
    SnrField,
    SnrScheme,
    make_grid,
)
from .exceptions import DomainError
from .value_objects import (
    Area,
    BeamCodebook,
    DominantSet,
    JointConfig,
    PhaseBook,
    ResourceBudget,
)

__all__ = [
    # Entities
    "NetworkScenario",
    "Grid",
    "make_grid",
    "ChannelVector",
    "ChannelField",
    "BeamPowerTable",
    "JointBeamPlan",
    "PlanScheme",
    "GreedyTrace",
    "SnrField",
    "SnrScheme",
    "IndependentBeamPolicy",
    "CoverageReport",
    "RunManifest",
    # Value Objects
    "Area",
    "BeamCodebook",
    "PhaseBook",
    "JointConfig",
    "ResourceBudget",
    "DominantSet",
    # Exceptions
    "DomainError",
]
