"""
Channel entities.

ChannelVector is the LoS channel h_b from one BS to one location.
ChannelField caches h_b for every (BS, cell) pair of a grid.
"""

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from app.shared.types import ComplexArray, Point

from ..exceptions import InvalidValueError


@dataclass(frozen=True, eq=False)
class ChannelVector:
    """
    Attributes:
        coeffs: complex length-N vector h_b
        bs_index: 1-based BS index
        location: UE location in meters
    """

    coeffs: ComplexArray
    bs_index: int
    location: Point

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if coeffs.size < 1:
            raise InvalidValueError("channel", "needs at least one coefficient")
        if not np.all(np.isfinite(coeffs)):
            raise InvalidValueError("channel", "coefficients must be finite")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def num_antennas(self) -> int:
        return int(self.coeffs.size)

    def __len__(self) -> int:
        return self.num_antennas


@dataclass(frozen=True, eq=False)
class ChannelField:
    """
    Precomputed channel table.

    Attributes:
        coeffs: (B, G, N) complex array; coeffs[b - 1, g] is h_b at cell g
        cells: (G, 2) cell centers, same order as the grid
    """

    coeffs: ComplexArray
    cells: np.ndarray

    def __post_init__(self):
        if self.coeffs.ndim != 3 or self.coeffs.shape[1] != self.cells.shape[0]:
            raise InvalidValueError("channel_field", "table shape does not match grid")
        self.coeffs.setflags(write=False)

    @property
    def num_bs(self) -> int:
        return int(self.coeffs.shape[0])

    @property
    def num_cells(self) -> int:
        return int(self.coeffs.shape[1])

    @property
    def num_antennas(self) -> int:
        return int(self.coeffs.shape[2])

    def blocks(self) -> Iterator[tuple[slice, ComplexArray]]:
        """Single block covering every cell (same protocol as on-the-fly blocks)."""
        yield slice(0, self.num_cells), self.coeffs
