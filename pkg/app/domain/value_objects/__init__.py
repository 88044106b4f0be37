"""
Value Objects Module.

Value Objects are immutable objects that are defined by their attributes
rather than a unique identity. They encapsulate domain concepts and ensure
consistency through validation.

Implemented Value Objects:
- Area: axis-aligned simulation rectangle
- BeamCodebook: per-BS set of unit-norm beamformers
- PhaseBook: orthogonal per-BS phase rows
- JointConfig / ResourceBudget: one joint configuration and its accounting
- DominantSet: BSs that matter at a location
"""

from .area import Area
from .beam_codebook import BeamCodebook
from .dominant_set import DominantSet
from .joint_config import JointConfig, ResourceBudget
from .phase_book import PhaseBook

__all__ = [
    "Area",
    "BeamCodebook",
    "PhaseBook",
    "JointConfig",
    "ResourceBudget",
    "DominantSet",
]
