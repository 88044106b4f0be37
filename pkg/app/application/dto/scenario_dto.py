"""
Scenario document schema.

Validated shape of a scenario configuration document. Accepts the sectioned
layout ([radio], [array], [area], [grid], [calibration], [selection]) and the
flat layout that uses the scenario field names directly.
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

# section -> {document key: scenario field}
SECTION_KEYS: dict[str, dict[str, str]] = {
    "radio": {
        "carrier_freq_hz": "carrier_freq_hz",
        "wavelength_scale": "wavelength_scale",
        "noise_power_dbm": "noise_power_dbm",
        "min_distance_m": "min_distance_m",
    },
    "array": {
        "num_antennas": "num_antennas",
        "antenna_spacing_wavelengths": "antenna_spacing_wavelengths",
        "bs_boresight": "bs_boresight",
        "exact_element_distances": "exact_element_distances",
    },
    "grid": {"step_m": "grid_step_m", "grid_step_m": "grid_step_m"},
    "calibration": {
        "snr_offset_db": "snr_offset_db",
        "knee_db": "calibration_knee_db",
        "calibration_knee_db": "calibration_knee_db",
    },
    "selection": {"n_select": "n_select"},
}

DEFAULT_WAVELENGTH_SCALE = 100.0


class AreaDocument(BaseModel):
    """Rectangle bounds in meters."""

    x_min: float
    y_min: float
    x_max: float
    y_max: float

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="before")
    @classmethod
    def accept_bounds_list(cls, value: Any) -> Any:
        """Allow ``area = [x_min, y_min, x_max, y_max]``."""
        if isinstance(value, (list, tuple)) and len(value) == 4:
            return dict(zip(("x_min", "y_min", "x_max", "y_max"), value))
        return value


class ScenarioDocument(BaseModel):
    """
    Scenario configuration.

    Only structure and types are checked here; physical invariants are
    enforced by NetworkScenario.
    """

    bs_positions: list[tuple[float, float]] = Field(..., min_length=1)
    bs_powers_dbm: list[float]
    num_antennas: int
    carrier_freq_hz: float
    wavelength_scale: float = DEFAULT_WAVELENGTH_SCALE
    noise_power_dbm: float
    area: AreaDocument
    grid_step_m: float | None = None
    antenna_spacing_wavelengths: float = 0.5
    bs_boresight: list[float] | None = None
    min_distance_m: float = 1.0
    snr_offset_db: float = 0.0
    calibration_knee_db: float | None = None
    exact_element_distances: bool = False
    n_select: int | None = None

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="before")
    @classmethod
    def flatten_sections(cls, data: Any) -> Any:
        """Lift keys of known sections to the top level."""
        if not isinstance(data, dict):
            return data
        flat = {k: v for k, v in data.items() if k not in SECTION_KEYS}
        for section, keys in SECTION_KEYS.items():
            if section not in data:
                continue
            content = data[section]
            if not isinstance(content, dict):
                flat[section] = content
                continue
            for key, value in content.items():
                flat[keys.get(key, f"{section}.{key}")] = value
        return flat
