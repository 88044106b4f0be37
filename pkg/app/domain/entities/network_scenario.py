"""
NetworkScenario Entity.

One simulation world: BS placement, radio constants and area discretization.

Rules Applied:
- B >= 1, N >= 1, powers finite, carrier frequency and wavelength scale > 0
- grid step strictly below the scaled wavelength and tiling the area exactly
- every BS on or inside the area boundary
- min_distance_m > 0
"""

import math
from dataclasses import dataclass

from app.shared.types import Point
from app.shared.utils import dbm_to_mw, wavelength_m

from ..exceptions import InvalidValueError
from ..value_objects import Area

TILING_TOLERANCE = 1e-9


@dataclass(frozen=True)
class NetworkScenario:
    """
    Immutable scenario; safe to share read-only across workers.

    Angles are radians, distances meters, powers dBm. BS indices are 1-based
    wherever they appear in the public API.
    """

    bs_positions: tuple[Point, ...]
    bs_powers_dbm: tuple[float, ...]
    num_antennas: int
    carrier_freq_hz: float
    wavelength_scale: float
    noise_power_dbm: float
    area: Area
    grid_step_m: float
    antenna_spacing_wavelengths: float
    bs_boresight: tuple[float, ...]
    min_distance_m: float
    snr_offset_db: float = 0.0
    calibration_knee_db: float | None = None
    exact_element_distances: bool = False
    n_select: int | None = None

    def __post_init__(self):
        """Validate entity invariants after initialization."""
        self._validate_stations()
        self._validate_radio()
        self._validate_geometry()
        self._validate_grid_step()
        self._validate_selection()

    @staticmethod
    def create(
        bs_positions: list[Point] | tuple[Point, ...],
        bs_powers_dbm: list[float] | tuple[float, ...],
        num_antennas: int,
        carrier_freq_hz: float,
        wavelength_scale: float,
        noise_power_dbm: float,
        area: Area,
        grid_step_m: float | None = None,
        antenna_spacing_wavelengths: float = 0.5,
        bs_boresight: list[float] | tuple[float, ...] | None = None,
        min_distance_m: float = 1.0,
        snr_offset_db: float = 0.0,
        calibration_knee_db: float | None = None,
        exact_element_distances: bool = False,
        n_select: int | None = None,
    ) -> "NetworkScenario":
        """
        Factory method that fills the documented defaults.

        Defaults:
            grid_step_m: lambda'/4, snapped down so it tiles the area
            bs_boresight: each array's broadside aimed at the area centroid
        """
        positions = tuple((float(x), float(y)) for x, y in bs_positions)
        if grid_step_m is None:
            lam = wavelength_m(carrier_freq_hz, wavelength_scale)
            grid_step_m = NetworkScenario.default_grid_step(area, lam)
        if bs_boresight is None:
            bs_boresight = NetworkScenario.default_boresight(positions, area)
        return NetworkScenario(
            bs_positions=positions,
            bs_powers_dbm=tuple(float(p) for p in bs_powers_dbm),
            num_antennas=int(num_antennas),
            carrier_freq_hz=float(carrier_freq_hz),
            wavelength_scale=float(wavelength_scale),
            noise_power_dbm=float(noise_power_dbm),
            area=area,
            grid_step_m=float(grid_step_m),
            antenna_spacing_wavelengths=float(antenna_spacing_wavelengths),
            bs_boresight=tuple(float(a) for a in bs_boresight),
            min_distance_m=float(min_distance_m),
            snr_offset_db=float(snr_offset_db),
            calibration_knee_db=(
                None if calibration_knee_db is None else float(calibration_knee_db)
            ),
            exact_element_distances=bool(exact_element_distances),
            n_select=n_select,
        )

    @staticmethod
    def default_grid_step(area: Area, wavelength: float) -> float:
        """
        Largest step <= lambda'/4 that tiles ``area`` exactly.

        Raises:
            InvalidValueError: If no such step tiles both axes
        """
        target = wavelength / 4.0
        for extent in (area.width, area.height):
            cells = math.ceil(extent / target - TILING_TOLERANCE)
            step = extent / cells
            if _tiles(area.width, step) and _tiles(area.height, step):
                return step
        raise InvalidValueError(
            "grid_step_m", "no default step tiles the area; set it explicitly"
        )

    @staticmethod
    def default_boresight(positions: tuple[Point, ...], area: Area) -> tuple[float, ...]:
        """Broadside angle of each array pointing at the area centroid."""
        cx, cy = area.centroid
        angles = []
        for x, y in positions:
            dx, dy = cx - x, cy - y
            angles.append(0.0 if dx == 0.0 and dy == 0.0 else math.atan2(dy, dx))
        return tuple(angles)

    # ------------------------------------------------------------------ props

    @property
    def num_bs(self) -> int:
        return len(self.bs_positions)

    @property
    def wavelength(self) -> float:
        """Scaled wavelength lambda' used in path loss and phase terms."""
        return wavelength_m(self.carrier_freq_hz, self.wavelength_scale)

    @property
    def bs_powers_mw(self) -> tuple[float, ...]:
        return tuple(dbm_to_mw(p) for p in self.bs_powers_dbm)

    @property
    def noise_mw(self) -> float:
        return dbm_to_mw(self.noise_power_dbm)

    def effective_noise_mw(self, offset_db: float | None = None) -> float:
        """Noise power with a calibration offset folded in (SNR + offset dB)."""
        offset = self.snr_offset_db if offset_db is None else offset_db
        return dbm_to_mw(self.noise_power_dbm - offset)

    @property
    def joint_tuple_count(self) -> int:
        """N^Joint; defaults to the codebook size N^Ind."""
        return self.num_antennas if self.n_select is None else self.n_select

    # ------------------------------------------------------------- validation

    def _validate_stations(self) -> None:
        if self.num_bs < 1:
            raise InvalidValueError("bs_positions", "at least one BS is required")
        if len(self.bs_powers_dbm) != self.num_bs:
            raise InvalidValueError(
                "bs_powers_dbm",
                f"length {len(self.bs_powers_dbm)} does not match B={self.num_bs}",
            )
        if len(self.bs_boresight) != self.num_bs:
            raise InvalidValueError(
                "bs_boresight",
                f"length {len(self.bs_boresight)} does not match B={self.num_bs}",
            )
        if not all(math.isfinite(p) for p in self.bs_powers_dbm):
            raise InvalidValueError("bs_powers_dbm", "powers must be finite")
        if not all(math.isfinite(a) for a in self.bs_boresight):
            raise InvalidValueError("bs_boresight", "angles must be finite")
        for position in self.bs_positions:
            if not all(math.isfinite(c) for c in position):
                raise InvalidValueError("bs_positions", "coordinates must be finite")

    def _validate_radio(self) -> None:
        if self.num_antennas < 1:
            raise InvalidValueError("num_antennas", "must be >= 1")
        if not math.isfinite(self.carrier_freq_hz) or self.carrier_freq_hz <= 0:
            raise InvalidValueError("carrier_freq_hz", "must be positive and finite")
        if not math.isfinite(self.wavelength_scale) or self.wavelength_scale <= 0:
            raise InvalidValueError("wavelength_scale", "must be positive and finite")
        if not math.isfinite(self.noise_power_dbm):
            raise InvalidValueError("noise_power_dbm", "must be finite")
        if not math.isfinite(self.snr_offset_db):
            raise InvalidValueError("snr_offset_db", "must be finite")
        if self.calibration_knee_db is not None and not math.isfinite(
            self.calibration_knee_db
        ):
            raise InvalidValueError("calibration_knee_db", "must be finite")
        if (
            not math.isfinite(self.antenna_spacing_wavelengths)
            or self.antenna_spacing_wavelengths <= 0
        ):
            raise InvalidValueError(
                "antenna_spacing_wavelengths", "must be positive and finite"
            )

    def _validate_geometry(self) -> None:
        if not math.isfinite(self.min_distance_m) or self.min_distance_m <= 0:
            raise InvalidValueError("min_distance_m", "must be positive")
        for position in self.bs_positions:
            if not self.area.contains(position):
                raise InvalidValueError(
                    "bs_positions", f"{position} lies outside {self.area!r}"
                )

    def _validate_grid_step(self) -> None:
        step = self.grid_step_m
        if not math.isfinite(step) or step <= 0:
            raise InvalidValueError("grid_step_m", "must be positive and finite")
        if step >= self.wavelength:
            raise InvalidValueError(
                "grid_step_m",
                f"{step:g} m is not below the scaled wavelength {self.wavelength:g} m",
            )
        if not (_tiles(self.area.width, step) and _tiles(self.area.height, step)):
            raise InvalidValueError("grid_step_m", f"{step:g} m does not tile the area")

    def _validate_selection(self) -> None:
        if self.n_select is not None and self.n_select < 1:
            raise InvalidValueError("n_select", "must be >= 1")

    def __repr__(self) -> str:
        return (
            f"NetworkScenario(B={self.num_bs}, N={self.num_antennas}, "
            f"f={self.carrier_freq_hz:g} Hz, step={self.grid_step_m:g} m)"
        )


def _tiles(extent: float, step: float) -> bool:
    ratio = extent / step
    return abs(ratio - round(ratio)) <= TILING_TOLERANCE * max(1.0, ratio)
