"""
SnrField Entity.

Per-cell SNR (dB) of one transmission scheme over the grid, together with
the resource accounting it was evaluated under.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from app.shared.types import FloatArray, IntArray

from ..exceptions import InvalidValueError
from ..value_objects import ResourceBudget


class SnrScheme(str, Enum):
    INDEPENDENT = "independent"
    JOINT_FIXED = "joint_fixed"
    JOINT_ENHANCED = "joint_enhanced"


class IndependentBeamPolicy(str, Enum):
    """
    Beam used by the closest BS in the independent baseline.

    SERVING: the closest BS's beam in the tuple serving the cell.
    BEST: the codebook beam maximizing |h_k^H f| at the cell.
    """

    SERVING = "serving"
    BEST = "best"


@dataclass(frozen=True, eq=False)
class SnrField:
    """
    Attributes:
        scheme: transmission scheme the values belong to
        values_db: (G,) SNR in dB; -inf marks cells with exactly zero signal
        budget: resource accounting (R is the average repetition count)
        repetitions: (G,) repetitions applied at each cell
        serving: (G,) index of the plan tuple serving each cell, if any
        label: column name used in reports (defaults to the scheme value)
    """

    scheme: SnrScheme
    values_db: FloatArray
    budget: ResourceBudget
    repetitions: FloatArray
    serving: IntArray | None = None
    label: str = ""

    def __post_init__(self):
        values = np.asarray(self.values_db, dtype=np.float64)
        if values.ndim != 1:
            raise InvalidValueError("values_db", "must be one value per cell")
        if np.any(np.isnan(values)) or np.any(values == np.inf):
            raise InvalidValueError("values_db", "only finite values or -inf allowed")
        if self.repetitions.shape != values.shape:
            raise InvalidValueError("repetitions", "must be one count per cell")
        values.setflags(write=False)
        object.__setattr__(self, "values_db", values)
        if not self.label:
            object.__setattr__(self, "label", self.scheme.value)

    @property
    def size(self) -> int:
        return int(self.values_db.size)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"SnrField(label={self.label}, cells={self.size})"
