from .domain_errors import (
    AllZeroTermsError,
    DegenerateClosestError,
    DimensionMismatchError,
    DomainError,
    EmptyInputError,
    EmptyRegionError,
    GridMismatchError,
    InvalidValueError,
    LocationOutsideAreaError,
    MissingFieldError,
    OutOfRangeError,
    ResourceLimitError,
)

__all__ = [
    "DomainError",
    "MissingFieldError",
    "InvalidValueError",
    "OutOfRangeError",
    "LocationOutsideAreaError",
    "DimensionMismatchError",
    "ResourceLimitError",
    "DegenerateClosestError",
    "AllZeroTermsError",
    "EmptyRegionError",
    "GridMismatchError",
    "EmptyInputError",
]
