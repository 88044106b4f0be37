"""
DominantSet Value Object.

BSs whose beamformed power at a location is within a factor alpha of the
strongest contributor.
"""

from dataclasses import dataclass

from ..exceptions import InvalidValueError


@dataclass(frozen=True)
class DominantSet:
    """
    Attributes:
        members: 1-based BS indices, ascending
        alpha: threshold in (0, 1]
    """

    members: frozenset[int]
    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise InvalidValueError("alpha", "must lie in (0, 1]")
        if not self.members:
            raise InvalidValueError("dominant_set", "cannot be empty")

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, bs_index: object) -> bool:
        return bs_index in self.members
