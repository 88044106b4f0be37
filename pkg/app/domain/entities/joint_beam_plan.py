"""
JointBeamPlan Entity.

Ordered joint beam tuples selected for SSB transmission, with the repetition
count and phase book each tuple is broadcast with.

Rules Applied:
- every tuple has one 0-based beam index per BS
- 1 <= reps_per_tuple[i] <= B and phase_books[i] has reps_per_tuple[i] rows
- phase_books[i] has one column per active BS of tuple i
- fixed scheme: every BS active, reps = B for every tuple
- active BS indices are 1-based and ascending
"""

from dataclasses import dataclass, field
from enum import Enum

from app.shared.types import BeamTuple

from ..exceptions import InvalidValueError, OutOfRangeError
from ..value_objects import PhaseBook


class PlanScheme(str, Enum):
    FIXED = "fixed"
    ENHANCED = "enhanced"


@dataclass(frozen=True)
class JointBeamPlan:
    """
    Attributes:
        tuples: selected beam tuples, in selection order
        reps_per_tuple: repetition count per tuple
        active_sets: BSs (1-based) transmitting each tuple
        phase_books: phase book broadcast with each tuple
        num_beams: codebook size M the indices refer to
        scheme: fixed or enhanced
        alpha: dominance threshold used for an enhanced plan
    """

    tuples: tuple[BeamTuple, ...]
    reps_per_tuple: tuple[int, ...]
    active_sets: tuple[tuple[int, ...], ...]
    phase_books: tuple[PhaseBook, ...]
    num_beams: int
    scheme: PlanScheme = PlanScheme.FIXED
    alpha: float | None = None

    def __post_init__(self):
        self._validate_lengths()
        self._validate_tuples()
        self._validate_repetitions()
        if self.scheme is PlanScheme.FIXED and self.total_transmissions != (
            self.num_bs * self.n_joint
        ):
            raise InvalidValueError(
                "reps_per_tuple", "a fixed plan transmits every tuple B times"
            )

    @property
    def n_joint(self) -> int:
        return len(self.tuples)

    @property
    def num_bs(self) -> int:
        return len(self.tuples[0])

    @property
    def total_transmissions(self) -> int:
        return sum(self.reps_per_tuple)

    def _validate_lengths(self) -> None:
        if not self.tuples:
            raise InvalidValueError("tuples", "a plan needs at least one tuple")
        n = len(self.tuples)
        for name, items in (
            ("reps_per_tuple", self.reps_per_tuple),
            ("active_sets", self.active_sets),
            ("phase_books", self.phase_books),
        ):
            if len(items) != n:
                raise InvalidValueError(name, f"expected {n} entries, got {len(items)}")

    def _validate_tuples(self) -> None:
        width = len(self.tuples[0])
        for beam_tuple in self.tuples:
            if len(beam_tuple) != width:
                raise InvalidValueError("tuples", "every tuple needs one beam per BS")
            for index in beam_tuple:
                if not 0 <= index < self.num_beams:
                    raise OutOfRangeError("beam_index", index, 0, self.num_beams - 1)
        if len(set(self.tuples)) != len(self.tuples):
            raise InvalidValueError("tuples", "tuples must be distinct")

    def _validate_repetitions(self) -> None:
        for reps, active, book in zip(
            self.reps_per_tuple, self.active_sets, self.phase_books
        ):
            if not 1 <= reps <= self.num_bs:
                raise OutOfRangeError("reps_per_tuple", reps, 1, self.num_bs)
            if not active or list(active) != sorted(set(active)):
                raise InvalidValueError("active_sets", "must be non-empty and ascending")
            if active[0] < 1 or active[-1] > self.num_bs:
                raise OutOfRangeError("bs_index", active[-1], 1, self.num_bs)
            if reps > len(active):
                raise InvalidValueError(
                    "reps_per_tuple", "cannot exceed the number of active BSs"
                )
            if book.repetitions != reps:
                raise InvalidValueError(
                    "phase_books", "row count must equal the repetition count"
                )
            if book.width != len(active):
                raise InvalidValueError(
                    "phase_books", "needs one column per active BS"
                )

    def __repr__(self) -> str:
        return (
            f"JointBeamPlan(scheme={self.scheme.value}, n_joint={self.n_joint}, "
            f"total_transmissions={self.total_transmissions})"
        )


@dataclass(frozen=True)
class GreedyTrace:
    """
    Bookkeeping of a greedy run.

    Attributes:
        marginal_gains: newly covered cells per iteration
        num_cells: grid size the gains refer to
    """

    marginal_gains: tuple[int, ...]
    num_cells: int
    covered_counts: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        running, counts = 0, []
        for gain in self.marginal_gains:
            running += gain
            counts.append(running)
        object.__setattr__(self, "covered_counts", tuple(counts))

    @property
    def union_coverage(self) -> float:
        """Fraction of cells covered by the whole plan at the selection threshold."""
        if not self.covered_counts or self.num_cells == 0:
            return 0.0
        return self.covered_counts[-1] / self.num_cells
