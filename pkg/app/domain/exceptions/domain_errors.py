"""
Domain-level exceptions.

These represent violations of physical or structural invariants inside the
simulation domain (scenario geometry, array dimensions, selection inputs).
"""


class DomainError(Exception):
    """Base class for all domain errors."""

    pass


# --- Configuration / validation ---
class MissingFieldError(DomainError):
    """Raised when a required scenario field is absent."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Missing required field '{name}'")


class InvalidValueError(DomainError):
    """Raised when a value is non-finite, out of its domain or inconsistent."""

    def __init__(self, name: str, reason: str):
        self.name = name
        self.reason = reason
        super().__init__(f"Invalid value for '{name}': {reason}")


class OutOfRangeError(DomainError):
    """Raised when an index falls outside its valid range."""

    def __init__(self, name: str, value: int, low: int, high: int):
        self.name = name
        self.value = value
        super().__init__(f"{name}={value} outside [{low}..{high}]")


class LocationOutsideAreaError(DomainError):
    """Raised when a UE location lies outside the simulation area."""

    def __init__(self, location: tuple[float, float]):
        self.location = location
        super().__init__(f"Location ({location[0]:g}, {location[1]:g}) is outside the area")


# --- Numerics ---
class DimensionMismatchError(DomainError):
    """Raised when per-BS inputs disagree in length."""

    def __init__(self, what: str, expected: int, actual: int):
        super().__init__(f"{what}: expected length {expected}, got {actual}")


class ResourceLimitError(DomainError):
    """Raised when a precomputed table would exceed the memory budget."""

    def __init__(self, required_bytes: int, budget_bytes: int):
        self.required_bytes = required_bytes
        self.budget_bytes = budget_bytes
        super().__init__(
            f"Channel table needs {required_bytes} bytes, budget is {budget_bytes}"
        )


class DegenerateClosestError(DomainError):
    """Raised when the closest BS contributes no power (infinite relative gain)."""

    pass


class AllZeroTermsError(DomainError):
    """Raised when every per-BS term is zero."""

    pass


# --- Selection / coverage ---
class EmptyRegionError(DomainError):
    """Raised when a joint beam tuple serves no grid cell."""

    def __init__(self, tuple_index: int):
        self.tuple_index = tuple_index
        super().__init__(f"Joint beam tuple {tuple_index} serves no cell")


class GridMismatchError(DomainError):
    """Raised when two SNR fields do not share grid and budget."""

    pass


class EmptyInputError(DomainError):
    """Raised when a sweep receives no fields or no thresholds."""

    pass
