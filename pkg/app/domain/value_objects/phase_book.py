"""
PhaseBook Value Object.

Set of per-BS phase tuples transmitted as repetitions of one joint beam.
A square book has mutually orthogonal unit-modulus rows, so every cross term
between BSs cancels once the UE sums the repetitions. A reduced book has fewer
rows than BSs; the cross term of two BSs cancels when their columns are
orthogonal.
"""

import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from app.shared.types import ComplexArray, PhaseRow

from ..exceptions import InvalidValueError


@dataclass(frozen=True)
class PhaseBook:
    """
    Ordered phase rows (radians), one row per repetition.

    Business Rules:
        - At least one row, all rows of equal width
        - First phase of every row is 0 (BS 1 is the reference)
        - All phases finite
    """

    rows: tuple[PhaseRow, ...]

    ORTHOGONALITY_TOLERANCE = 1e-12

    def __post_init__(self):
        """Validate row structure."""
        if not self.rows:
            raise InvalidValueError("phase_book", "needs at least one row")
        width = len(self.rows[0])
        if width < 1 or any(len(row) != width for row in self.rows):
            raise InvalidValueError("phase_book", "rows must share a non-zero width")
        for row in self.rows:
            if not all(math.isfinite(theta) for theta in row):
                raise InvalidValueError("phase_book", "phases must be finite")
            if row[0] != 0.0:
                raise InvalidValueError("phase_book", "first phase must be 0")

    @property
    def width(self) -> int:
        """Number of cooperating BSs."""
        return len(self.rows[0])

    @property
    def repetitions(self) -> int:
        """Number of rows, i.e. transmissions of the same beam tuple."""
        return len(self.rows)

    def amplitudes(self) -> ComplexArray:
        """(repetitions, width) matrix of e^{i theta}."""
        return np.exp(1j * np.asarray(self.rows, dtype=np.float64))

    def gram(self) -> ComplexArray:
        """Row Gram matrix; equals width * I for an orthogonal book."""
        amps = self.amplitudes()
        return amps @ amps.conj().T

    def is_orthogonal(self, tolerance: float = ORTHOGONALITY_TOLERANCE) -> bool:
        expected = self.width * np.eye(self.repetitions)
        return bool(np.all(np.abs(self.gram() - expected) <= tolerance))

    def column_gram(self) -> ComplexArray:
        """(width, width) matrix; entry (a, b) scales the cross term of BSs a and b."""
        amps = self.amplitudes()
        return amps.conj().T @ amps

    def cancels_cross_terms(
        self, columns: Iterable[int], tolerance: float = ORTHOGONALITY_TOLERANCE
    ) -> bool:
        """True if the given 0-based columns are pairwise orthogonal."""
        picked = sorted(set(columns))
        block = self.column_gram()[np.ix_(picked, picked)]
        off_diagonal = block - np.diag(np.diag(block))
        return bool(np.all(np.abs(off_diagonal) <= tolerance))

    def in_units_of_pi(self) -> list[list[float]]:
        return [[theta / math.pi for theta in row] for row in self.rows]
