"""
Joint transmission value objects.

JointConfig is one over-the-air configuration (beam per BS + phase per BS);
ResourceBudget is the transmission accounting used to compare joint and
independent schemes on equal resources.
"""

import math
from dataclasses import dataclass

from app.shared.types import BeamTuple, PhaseRow

from ..exceptions import InvalidValueError


@dataclass(frozen=True)
class JointConfig:
    """
    Beam indices (0-based, one per BS) and phase row (radians, one per BS).
    """

    beam_indices: BeamTuple
    phase_row: PhaseRow

    def __post_init__(self):
        if len(self.beam_indices) != len(self.phase_row):
            raise InvalidValueError("joint_config", "beam and phase widths differ")
        if any(index < 0 for index in self.beam_indices):
            raise InvalidValueError("beam_indices", "indices must be non-negative")
        if not all(math.isfinite(theta) for theta in self.phase_row):
            raise InvalidValueError("phase_row", "phases must be finite")

    @property
    def num_bs(self) -> int:
        return len(self.beam_indices)


@dataclass(frozen=True)
class ResourceBudget:
    """
    Transmission accounting for a joint-vs-independent comparison.

    Attributes:
        n_ind: independent beams per BS (N^Ind)
        n_joint: selected joint beam tuples (N^Joint)
        repetitions_ind: repetitions R granted to the independent baseline
    """

    n_ind: int
    n_joint: int
    repetitions_ind: float

    def __post_init__(self):
        if self.n_ind < 1:
            raise InvalidValueError("n_ind", "must be >= 1")
        if self.n_joint < 1:
            raise InvalidValueError("n_joint", "must be >= 1")
        if not math.isfinite(self.repetitions_ind) or self.repetitions_ind <= 0:
            raise InvalidValueError("repetitions_ind", "must be positive and finite")

    @staticmethod
    def matched(num_bs: int, n_ind: int, n_joint: int) -> "ResourceBudget":
        """Budget with R = B * N^Joint / N^Ind."""
        return ResourceBudget(n_ind, n_joint, num_bs * n_joint / n_ind)

    @property
    def resource_ratio_db(self) -> float:
        """10 log10(N^Ind / N^Joint), the accounting term of the gain."""
        return 10.0 * math.log10(self.n_ind / self.n_joint)
