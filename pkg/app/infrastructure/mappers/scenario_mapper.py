import hashlib
import json
from typing import Any

from app.application.services import build_scenario
from app.domain.entities import NetworkScenario
from app.shared.interfaces.mapper import IMapper


class ScenarioMapper(IMapper[NetworkScenario, dict[str, Any]]):
    """Flat configuration document <-> NetworkScenario."""

    def to_domain(self, persistence_model: dict[str, Any]) -> NetworkScenario:
        return build_scenario(persistence_model)

    def to_persistence(self, domain_entity: NetworkScenario) -> dict[str, Any]:
        area = domain_entity.area
        doc: dict[str, Any] = {
            "bs_positions": [list(p) for p in domain_entity.bs_positions],
            "bs_powers_dbm": list(domain_entity.bs_powers_dbm),
            "num_antennas": domain_entity.num_antennas,
            "carrier_freq_hz": domain_entity.carrier_freq_hz,
            "wavelength_scale": domain_entity.wavelength_scale,
            "noise_power_dbm": domain_entity.noise_power_dbm,
            "area": {
                "x_min": area.x_min,
                "y_min": area.y_min,
                "x_max": area.x_max,
                "y_max": area.y_max,
            },
            "grid_step_m": domain_entity.grid_step_m,
            "antenna_spacing_wavelengths": domain_entity.antenna_spacing_wavelengths,
            "bs_boresight": list(domain_entity.bs_boresight),
            "min_distance_m": domain_entity.min_distance_m,
            "snr_offset_db": domain_entity.snr_offset_db,
            "exact_element_distances": domain_entity.exact_element_distances,
        }
        if domain_entity.calibration_knee_db is not None:
            doc["calibration_knee_db"] = domain_entity.calibration_knee_db
        if domain_entity.n_select is not None:
            doc["n_select"] = domain_entity.n_select
        return doc


def scenario_hash(scenario: NetworkScenario) -> str:
    """sha256 of the canonical (sorted-key, compact) JSON form of a scenario."""
    canonical = json.dumps(
        ScenarioMapper().to_persistence(scenario), sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
