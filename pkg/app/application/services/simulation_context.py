"""
Simulation context.

Everything a pipeline needs before it can select beams or evaluate fields:
grid, codebooks, the beam power table and the calibration offset.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from app.application.dto import SimulationOptions
from app.domain.entities import BeamPowerTable, Grid, NetworkScenario, make_grid
from app.domain.exceptions import InvalidValueError, ResourceLimitError
from app.domain.services import (
    beam_power_table,
    channel_field,
    closest_bs_indices,
    dft_codebook,
    iter_channel_blocks,
    reference_independent_snr_db,
)
from app.domain.value_objects import BeamCodebook

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimulationContext:
    scenario: NetworkScenario
    grid: Grid
    codebooks: tuple[BeamCodebook, ...]
    table: BeamPowerTable
    calibration_offset_db: float

    @property
    def n_ind(self) -> int:
        return self.table.num_beams

    @property
    def n_joint(self) -> int:
        return self.scenario.joint_tuple_count


def resolve_calibration_offset(
    scenario: NetworkScenario, raw_table: BeamPowerTable
) -> float:
    """
    SNR offset (dB) applied to every field.

    With a calibration knee, the offset puts the weakest best-beam independent
    SNR of the grid exactly at the knee; otherwise the scenario's fixed offset.

    Args:
        raw_table: power table evaluated against the uncalibrated noise
    """
    if scenario.calibration_knee_db is None:
        return scenario.snr_offset_db
    repetitions = scenario.num_bs * scenario.joint_tuple_count / raw_table.num_beams
    reference = reference_independent_snr_db(raw_table, repetitions)
    finite = reference[np.isfinite(reference)]
    if finite.size == 0:
        raise InvalidValueError("calibration_knee_db", "no cell receives any signal")
    offset = scenario.calibration_knee_db - float(finite.min())
    logger.info(
        "Calibration: offset %.3f dB puts the independent knee at %.2f dB",
        offset,
        scenario.calibration_knee_db,
    )
    return offset


def prepare_simulation(
    scenario: NetworkScenario, options: SimulationOptions | None = None
) -> SimulationContext:
    """
    Build grid, codebooks and the calibrated beam power table.

    Falls back to block-wise channel evaluation when the full channel table
    exceeds the memory budget.
    """
    options = options or SimulationOptions()
    grid = make_grid(scenario)
    codebooks = tuple(dft_codebook(scenario.num_antennas) for _ in range(scenario.num_bs))

    try:
        blocks = channel_field(
            scenario, grid, options.memory_budget_bytes, options.threads
        ).blocks()
    except ResourceLimitError as exc:
        logger.warning("%s; evaluating channels block by block", exc)
        blocks = iter_channel_blocks(scenario, grid, options.cell_block_size)

    raw_table = beam_power_table(
        powers_mw=scenario.bs_powers_mw,
        codebooks=codebooks,
        blocks=blocks,
        closest=closest_bs_indices(scenario, grid.cells),
        noise_mw=scenario.noise_mw,
    )
    offset = resolve_calibration_offset(scenario, raw_table)
    noise_mw = scenario.effective_noise_mw(offset)
    if not (math.isfinite(noise_mw) and noise_mw > 0):
        raise InvalidValueError("snr_offset_db", "offset drives the noise out of range")
    logger.info("Grid ready: %r, %d joint tuples available", grid, raw_table.tuple_count)
    return SimulationContext(
        scenario=scenario,
        grid=grid,
        codebooks=codebooks,
        table=raw_table.with_noise(noise_mw),
        calibration_offset_db=offset,
    )
