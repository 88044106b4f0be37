from .common_types import (
    BeamTuple,
    BoolArray,
    ComplexArray,
    FloatArray,
    IntArray,
    PhaseRow,
    Point,
)

__all__ = [
    "Point",
    "BeamTuple",
    "PhaseRow",
    "FloatArray",
    "ComplexArray",
    "IntArray",
    "BoolArray",
]
