from .units import (
    SPEED_OF_LIGHT,
    db_to_linear,
    dbm_to_mw,
    linear_to_db,
    wavelength_m,
)

__all__ = [
    "SPEED_OF_LIGHT",
    "dbm_to_mw",
    "db_to_linear",
    "linear_to_db",
    "wavelength_m",
]
