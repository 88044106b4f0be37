"""
Line-of-sight channel model.

h_b[n] = sqrt(g(d)) * exp(-i 2 pi d_n / lambda') with free-space gain
g(d) = (lambda' / (4 pi d))^2 and d clamped to the scenario's min distance.
Per-element distances use the far-field ULA approximation
d_n = d - n * spacing * lambda' * sin(phi) unless the scenario asks for
exact element distances. The array axis is the broadside rotated by +90 deg.
"""

import logging
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from app.shared.types import ComplexArray, FloatArray, IntArray, Point

from ..entities import ChannelField, ChannelVector, Grid, NetworkScenario
from ..exceptions import LocationOutsideAreaError, OutOfRangeError, ResourceLimitError

logger = logging.getLogger(__name__)

COMPLEX_BYTES = np.dtype(np.complex128).itemsize


def _check_bs_index(scenario: NetworkScenario, bs_index: int) -> None:
    if not 1 <= bs_index <= scenario.num_bs:
        raise OutOfRangeError("bs_index", bs_index, 1, scenario.num_bs)


def los_channel_block(
    scenario: NetworkScenario, bs_index: int, points: FloatArray
) -> ComplexArray:
    """
    Channel of one BS towards many points.

    Args:
        scenario: Simulation scenario
        bs_index: 1-based BS index
        points: (P, 2) locations in meters

    Returns:
        (P, N) complex array, row p is h_b at points[p]
    """
    _check_bs_index(scenario, bs_index)
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    lam = scenario.wavelength
    spacing_m = scenario.antenna_spacing_wavelengths * lam
    origin = np.asarray(scenario.bs_positions[bs_index - 1], dtype=np.float64)
    boresight = scenario.bs_boresight[bs_index - 1]
    n = np.arange(scenario.num_antennas, dtype=np.float64)

    offsets = points - origin
    distance = np.maximum(
        np.hypot(offsets[:, 0], offsets[:, 1]), scenario.min_distance_m
    )

    if scenario.exact_element_distances:
        axis = np.array([-np.sin(boresight), np.cos(boresight)])
        elements = origin + np.outer(n * spacing_m, axis)
        delta = points[:, None, :] - elements[None, :, :]
        element_distance = np.maximum(
            np.hypot(delta[..., 0], delta[..., 1]), scenario.min_distance_m
        )
    else:
        phi = np.arctan2(offsets[:, 1], offsets[:, 0]) - boresight
        element_distance = distance[:, None] - np.outer(np.sin(phi), n * spacing_m)

    amplitude = lam / (4.0 * np.pi * distance)
    return amplitude[:, None] * np.exp(-2j * np.pi * element_distance / lam)


def los_channel(
    scenario: NetworkScenario, bs_index: int, location: Point
) -> ChannelVector:
    """
    LoS channel from BS ``bs_index`` (1-based) to ``location``.

    Raises:
        OutOfRangeError: If bs_index is not in [1..B]
        LocationOutsideAreaError: If location lies outside the area
    """
    _check_bs_index(scenario, bs_index)
    point = (float(location[0]), float(location[1]))
    if not scenario.area.contains(point):
        raise LocationOutsideAreaError(point)
    coeffs = los_channel_block(scenario, bs_index, np.array([point]))[0]
    return ChannelVector(coeffs=coeffs, bs_index=bs_index, location=point)


def channel_table_bytes(scenario: NetworkScenario, grid: Grid) -> int:
    return scenario.num_bs * grid.size * scenario.num_antennas * COMPLEX_BYTES


def channel_field(
    scenario: NetworkScenario,
    grid: Grid,
    memory_budget_bytes: int | None = None,
    threads: int = 1,
) -> ChannelField:
    """
    Precompute h_b for every BS and cell.

    BSs are evaluated in parallel; each worker fills its own slice so the
    result does not depend on the worker count.

    Raises:
        ResourceLimitError: If the table exceeds ``memory_budget_bytes``
    """
    required = channel_table_bytes(scenario, grid)
    if memory_budget_bytes is not None and required > memory_budget_bytes:
        raise ResourceLimitError(required, memory_budget_bytes)

    bs_indices = range(1, scenario.num_bs + 1)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        blocks = list(
            executor.map(lambda b: los_channel_block(scenario, b, grid.cells), bs_indices)
        )
    logger.debug(
        "Channel table: %d BS x %d cells (%d bytes)", scenario.num_bs, grid.size, required
    )
    return ChannelField(coeffs=np.stack(blocks), cells=grid.cells)


def iter_channel_blocks(
    scenario: NetworkScenario, grid: Grid, block_cells: int
) -> Iterator[tuple[slice, ComplexArray]]:
    """
    On-the-fly channel evaluation in fixed-size cell blocks.

    Yields:
        (cell slice, (B, block, N) channel array)
    """
    block_cells = max(1, int(block_cells))
    for start in range(0, grid.size, block_cells):
        window = slice(start, min(start + block_cells, grid.size))
        points = grid.cells[window]
        yield window, np.stack(
            [los_channel_block(scenario, b, points) for b in range(1, scenario.num_bs + 1)]
        )


def closest_bs_indices(scenario: NetworkScenario, points: FloatArray) -> IntArray:
    """0-based index of the closest BS for each point; ties go to the lowest index."""
    points = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    positions = np.asarray(scenario.bs_positions, dtype=np.float64)
    delta = points[:, None, :] - positions[None, :, :]
    distance = np.hypot(delta[..., 0], delta[..., 1])
    return np.argmin(distance, axis=1).astype(np.int64)


def closest_bs_index(scenario: NetworkScenario, location: Point) -> int:
    """1-based index of the BS closest to ``location``; ties go to the lowest index."""
    return int(closest_bs_indices(scenario, np.array([location]))[0]) + 1
