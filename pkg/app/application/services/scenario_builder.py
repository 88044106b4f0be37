"""
Scenario builder.

Turns a parsed configuration document into a validated NetworkScenario.
"""

import logging
from collections.abc import Mapping
from typing import Any

from pydantic import ValidationError

from app.application.dto import ScenarioDocument
from app.domain.entities import NetworkScenario
from app.domain.exceptions import InvalidValueError, MissingFieldError
from app.domain.value_objects import Area

logger = logging.getLogger(__name__)


def _field_name(location: tuple[Any, ...]) -> str:
    return ".".join(str(part) for part in location) or "document"


def _raise_domain_error(exc: ValidationError) -> None:
    """Report the first pydantic error as a domain error."""
    error = exc.errors()[0]
    name = _field_name(error["loc"])
    if error["type"] == "missing":
        raise MissingFieldError(name) from exc
    raise InvalidValueError(name, error["msg"]) from exc


def build_scenario(document: Mapping[str, Any]) -> NetworkScenario:
    """
    Build a scenario from a configuration document.

    Args:
        document: Parsed configuration (sectioned or flat)

    Returns:
        Validated NetworkScenario with defaults filled in

    Raises:
        MissingFieldError: If a required key is absent
        InvalidValueError: If a value has the wrong type or breaks an invariant
    """
    try:
        doc = ScenarioDocument.model_validate(dict(document))
    except ValidationError as exc:
        _raise_domain_error(exc)

    scenario = NetworkScenario.create(
        bs_positions=doc.bs_positions,
        bs_powers_dbm=doc.bs_powers_dbm,
        num_antennas=doc.num_antennas,
        carrier_freq_hz=doc.carrier_freq_hz,
        wavelength_scale=doc.wavelength_scale,
        noise_power_dbm=doc.noise_power_dbm,
        area=Area(doc.area.x_min, doc.area.y_min, doc.area.x_max, doc.area.y_max),
        grid_step_m=doc.grid_step_m,
        antenna_spacing_wavelengths=doc.antenna_spacing_wavelengths,
        bs_boresight=doc.bs_boresight,
        min_distance_m=doc.min_distance_m,
        snr_offset_db=doc.snr_offset_db,
        calibration_knee_db=doc.calibration_knee_db,
        exact_element_distances=doc.exact_element_distances,
        n_select=doc.n_select,
    )
    logger.info("Scenario built: %r", scenario)
    return scenario
