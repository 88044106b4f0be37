"""
Area Value Object.

Axis-aligned rectangle (meters) that bounds the simulated network.

Value Object Principles:
- Immutability: Cannot be changed after creation
- Self-validation: Validates bounds on construction
- Equality by value: Two Areas are equal if all bounds match
"""

import math
from dataclasses import dataclass

from app.shared.types import Point

from ..exceptions import InvalidValueError


@dataclass(frozen=True)
class Area:
    """
    Rectangle [x_min, x_max] x [y_min, y_max] in meters.

    Business Rules:
        - All bounds finite
        - x_max > x_min and y_max > y_min
    """

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    CONTAINS_TOLERANCE_M = 1e-9

    def __post_init__(self):
        """Validate bounds after initialization."""
        bounds = (self.x_min, self.y_min, self.x_max, self.y_max)
        if not all(math.isfinite(v) for v in bounds):
            raise InvalidValueError("area", "bounds must be finite")
        if self.x_max <= self.x_min or self.y_max <= self.y_min:
            raise InvalidValueError("area", "max bounds must exceed min bounds")

    @staticmethod
    def square(side_m: float, origin: Point = (0.0, 0.0)) -> "Area":
        """Create a square area with its lower-left corner at ``origin``."""
        return Area(origin[0], origin[1], origin[0] + side_m, origin[1] + side_m)

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    @property
    def centroid(self) -> Point:
        return (0.5 * (self.x_min + self.x_max), 0.5 * (self.y_min + self.y_max))

    def contains(self, point: Point) -> bool:
        """Check if a point lies on or inside the boundary."""
        tol = self.CONTAINS_TOLERANCE_M
        return (
            self.x_min - tol <= point[0] <= self.x_max + tol
            and self.y_min - tol <= point[1] <= self.y_max + tol
        )

    def __repr__(self) -> str:
        return (
            f"Area(x=[{self.x_min:g}, {self.x_max:g}], y=[{self.y_min:g}, {self.y_max:g}])"
        )
