"""
CoverageReport Entity.

Coverage fraction versus reference SNR for one or more schemes.
"""

from dataclasses import dataclass

from ..exceptions import EmptyInputError, InvalidValueError


@dataclass(frozen=True)
class CoverageReport:
    """
    Attributes:
        thresholds_db: strictly increasing reference SNRs
        curves: label -> coverage fraction per threshold, in insertion order

    Business Rules:
        - fractions lie in [0, 1]
        - every curve is nonincreasing in the threshold
    """

    thresholds_db: tuple[float, ...]
    curves: dict[str, tuple[float, ...]]

    def __post_init__(self):
        if not self.thresholds_db:
            raise EmptyInputError("coverage report needs at least one threshold")
        if not self.curves:
            raise EmptyInputError("coverage report needs at least one curve")
        if any(b <= a for a, b in zip(self.thresholds_db, self.thresholds_db[1:])):
            raise InvalidValueError("thresholds_db", "must be strictly increasing")
        for label, curve in self.curves.items():
            self._validate_curve(label, curve)

    def _validate_curve(self, label: str, curve: tuple[float, ...]) -> None:
        if len(curve) != len(self.thresholds_db):
            raise InvalidValueError(label, "one fraction per threshold required")
        if any(not 0.0 <= value <= 1.0 for value in curve):
            raise InvalidValueError(label, "fractions must lie in [0, 1]")
        if any(b > a for a, b in zip(curve, curve[1:])):
            raise InvalidValueError(label, "coverage must not grow with the threshold")

    @property
    def labels(self) -> list[str]:
        return list(self.curves)

    def fraction(self, label: str, threshold_db: float) -> float:
        index = self.thresholds_db.index(threshold_db)
        return self.curves[label][index]
