"""
Trace Fringe Use Case.

SNR of two cooperating BSs sampled along the line that joins them, for each
phase row separately and after combining all rows.
"""

import logging
import math

import numpy as np

from app.application.dto import FringeProfile, TraceFringeRequest
from app.application.services import prepare_simulation
from app.domain.entities import NetworkScenario
from app.domain.exceptions import InvalidValueError
from app.domain.services import (
    joint_closed_snr,
    los_channel_block,
    make_phase_book,
    phase_row_snrs,
)
from app.domain.value_objects import Area
from app.shared.interfaces import IUseCase
from app.shared.types import FloatArray, Point
from app.shared.utils import linear_to_db

logger = logging.getLogger(__name__)

FRINGE_NUM_BS = 2


def _ray_length_in_area(origin: Point, direction: FloatArray, area: Area) -> float:
    """Distance from ``origin`` along ``direction`` to the area boundary."""
    limits = []
    for axis, (low, high) in enumerate(
        ((area.x_min, area.x_max), (area.y_min, area.y_max))
    ):
        component = direction[axis]
        if component > 0:
            limits.append((high - origin[axis]) / component)
        elif component < 0:
            limits.append((low - origin[axis]) / component)
    return max(0.0, min(limits))


def sampling_line(
    scenario: NetworkScenario, samples_per_wavelength: int
) -> tuple[FloatArray, FloatArray]:
    """
    Sample positions along the BS 1 - BS 2 segment.

    Colocated BSs (closer than min_distance_m) are sampled along BS 1's
    broadside up to the area boundary instead.

    Returns:
        (positions from BS 1 in meters, (P, 2) points)
    """
    start = np.asarray(scenario.bs_positions[0], dtype=np.float64)
    end = np.asarray(scenario.bs_positions[1], dtype=np.float64)
    length = float(np.hypot(*(end - start)))
    if length < scenario.min_distance_m:
        boresight = scenario.bs_boresight[0]
        direction = np.array([math.cos(boresight), math.sin(boresight)])
        length = _ray_length_in_area(scenario.bs_positions[0], direction, scenario.area)
        if length <= 0:
            raise InvalidValueError("bs_boresight", "BS 1 faces out of the area")
    else:
        direction = (end - start) / length
    count = math.ceil(length / scenario.wavelength * samples_per_wavelength)
    positions = (np.arange(count) + 0.5) * length / count
    return positions, start + np.outer(positions, direction)


class TraceFringeUseCase(IUseCase[TraceFringeRequest, FringeProfile]):
    """
    Use case for the two-BS interference profile.

    Business Rules:
    - Exactly two BSs
    - Both BSs use the same codebook beam
    - The phase book is the order-2 one
    """

    def execute(self, request: TraceFringeRequest) -> FringeProfile:
        """
        Raises:
            InvalidValueError: If the scenario does not have exactly two BSs
        """
        scenario = request.scenario
        if scenario.num_bs != FRINGE_NUM_BS:
            raise InvalidValueError(
                "bs_positions", f"fringe needs exactly 2 BSs, got {scenario.num_bs}"
            )
        if request.samples_per_wavelength < 2:
            raise InvalidValueError("samples_per_wavelength", "must be >= 2")

        context = prepare_simulation(scenario, request.options)
        noise_mw = context.table.noise_mw
        positions, points = sampling_line(scenario, request.samples_per_wavelength)

        columns = []
        for b, power in enumerate(scenario.bs_powers_mw):
            channels = los_channel_block(scenario, b + 1, points)
            beam = context.codebooks[b].beam(request.beam_index)
            columns.append(math.sqrt(power) * (channels.conj() @ beam))
        amplitudes = np.column_stack(columns)
        book = make_phase_book(FRINGE_NUM_BS)
        per_row = phase_row_snrs(amplitudes, book, noise_mw)
        combined = per_row.sum(axis=1)
        closed = joint_closed_snr(
            (np.abs(amplitudes) ** 2).sum(axis=1), book.repetitions, noise_mw
        )
        logger.info("Fringe profile: %d samples over %.2f m", positions.size, positions[-1])
        return FringeProfile(
            positions_m=positions,
            phase_snr_db=linear_to_db(per_row),
            combined_snr_db=linear_to_db(combined),
            closed_form_snr_db=linear_to_db(closed),
            combined_snr=combined,
            closed_form_snr=closed,
            phase_book=book,
            calibration_offset_db=context.calibration_offset_db,
        )
