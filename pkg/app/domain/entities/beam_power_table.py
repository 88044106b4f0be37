"""
BeamPowerTable Entity.

Beamformed received power rho_b |h_b^H f_m|^2 for every BS b, codebook beam m
and grid cell g, plus the complex amplitudes sqrt(rho_b) h_b^H f_m the powers
come from. Every field-level SNR, coverage and selection computation works
from this table.
"""

from dataclasses import dataclass, replace

import numpy as np

from app.shared.types import BeamTuple, ComplexArray, FloatArray, IntArray

from ..exceptions import DimensionMismatchError, InvalidValueError, OutOfRangeError


@dataclass(frozen=True, eq=False)
class BeamPowerTable:
    """
    Attributes:
        powers: (B, M, G) linear powers in mW
        closest: (G,) 0-based index of the closest BS per cell (ties -> lowest)
        noise_mw: effective noise power used to turn powers into SNR
        amplitudes: (B, M, G) complex amplitudes; needed to apply phase rows
    """

    powers: FloatArray
    closest: IntArray
    noise_mw: float
    amplitudes: ComplexArray | None = None

    def __post_init__(self):
        if self.powers.ndim != 3:
            raise InvalidValueError("beam_power_table", "powers must be (B, M, G)")
        if self.closest.shape != (self.powers.shape[2],):
            raise DimensionMismatchError(
                "closest", self.powers.shape[2], int(self.closest.size)
            )
        if not self.noise_mw > 0:
            raise InvalidValueError("noise_mw", "must be positive")
        if self.amplitudes is not None:
            if self.amplitudes.shape != self.powers.shape:
                raise DimensionMismatchError(
                    "amplitudes", self.powers.size, int(self.amplitudes.size)
                )
            self.amplitudes.setflags(write=False)
        self.powers.setflags(write=False)
        self.closest.setflags(write=False)

    @property
    def num_bs(self) -> int:
        return int(self.powers.shape[0])

    @property
    def num_beams(self) -> int:
        return int(self.powers.shape[1])

    @property
    def num_cells(self) -> int:
        return int(self.powers.shape[2])

    @property
    def tuple_count(self) -> int:
        """Size of the full joint codebook, M^B."""
        return int(self.num_beams**self.num_bs)

    def with_noise(self, noise_mw: float) -> "BeamPowerTable":
        return replace(self, noise_mw=noise_mw)

    def check_tuple(self, beam_tuple: BeamTuple) -> None:
        if len(beam_tuple) != self.num_bs:
            raise DimensionMismatchError("beam tuple", self.num_bs, len(beam_tuple))
        for index in beam_tuple:
            if not 0 <= index < self.num_beams:
                raise OutOfRangeError("beam_index", index, 0, self.num_beams - 1)

    def tuple_terms(self, beam_tuple: BeamTuple) -> FloatArray:
        """(B, G) per-BS powers when BS b uses beam beam_tuple[b]."""
        self.check_tuple(beam_tuple)
        return np.stack([self.powers[b, m] for b, m in enumerate(beam_tuple)])

    def combined_power(
        self, beam_tuple: BeamTuple, members: tuple[int, ...] | None = None
    ) -> FloatArray:
        """
        Sum of per-BS powers over ``members`` (1-based, default all BSs).

        Accumulates in ascending BS order so every caller gets identical floats.
        """
        self.check_tuple(beam_tuple)
        indices = range(self.num_bs) if members is None else [b - 1 for b in members]
        total = np.zeros(self.num_cells, dtype=np.float64)
        for b in indices:
            total = total + self.powers[b, beam_tuple[b]]
        return total

    def closest_terms(self, beam_indices: IntArray) -> FloatArray:
        """
        Power of each cell's closest BS when it uses ``beam_indices[g]``.
        """
        cells = np.arange(self.num_cells)
        return self.powers[self.closest, beam_indices, cells]

    def best_closest_power(self) -> FloatArray:
        """Power of the closest BS's best beam at every cell."""
        cells = np.arange(self.num_cells)
        return self.powers[self.closest, :, cells].max(axis=1)

    def tuple_amplitudes(
        self, beam_tuple: BeamTuple, members: tuple[int, ...] | None = None
    ) -> ComplexArray:
        """
        (len(members), G) amplitudes of ``members`` (1-based, default all BSs).

        Raises:
            InvalidValueError: If the table was built without amplitudes
        """
        self.check_tuple(beam_tuple)
        if self.amplitudes is None:
            raise InvalidValueError("beam_power_table", "holds no complex amplitudes")
        indices = range(self.num_bs) if members is None else [b - 1 for b in members]
        return np.stack([self.amplitudes[b, beam_tuple[b]] for b in indices])
