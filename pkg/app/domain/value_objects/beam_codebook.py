"""
BeamCodebook Value Object.

Ordered set of transmit beamformers for one BS. Column ``m`` of ``matrix`` is
beam ``m``; the DFT codebook makes the columns orthonormal.
"""

from dataclasses import dataclass

import numpy as np

from app.shared.types import ComplexArray

from ..exceptions import InvalidValueError, OutOfRangeError


@dataclass(frozen=True, eq=False)
class BeamCodebook:
    """
    Codebook whose columns are unit-norm beamforming vectors.

    Attributes:
        matrix: (num_antennas, num_beams) complex matrix
    """

    matrix: ComplexArray

    NORM_TOLERANCE = 1e-12

    def __post_init__(self):
        """Validate shape and beam norms."""
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] < 1 or matrix.shape[1] < 1:
            raise InvalidValueError("codebook", "must be a non-empty 2-D matrix")
        norms = np.linalg.norm(matrix, axis=0)
        if np.any(np.abs(norms - 1.0) > self.NORM_TOLERANCE):
            raise InvalidValueError("codebook", "every beam must have unit norm")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def num_antennas(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def num_beams(self) -> int:
        return int(self.matrix.shape[1])

    def beam(self, index: int) -> ComplexArray:
        """Get beam ``index`` (0-based) as a length-N vector."""
        if not 0 <= index < self.num_beams:
            raise OutOfRangeError("beam_index", index, 0, self.num_beams - 1)
        return self.matrix[:, index]

    def gram(self) -> ComplexArray:
        """Gram matrix F^H F of the beams."""
        return self.matrix.conj().T @ self.matrix

    def __len__(self) -> int:
        return self.num_beams

    def __repr__(self) -> str:
        return f"BeamCodebook(N={self.num_antennas}, beams={self.num_beams})"
