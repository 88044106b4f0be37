"""
Grid Entity.

Discretization of the scenario area into square cells evaluated at their
centers. Cells are ordered row-major: index = row * nx + col, rows along y.
"""

from dataclasses import dataclass

import numpy as np

from app.shared.types import FloatArray, Point

from .network_scenario import NetworkScenario


@dataclass(frozen=True, eq=False)
class Grid:
    """
    Attributes:
        cells: (G, 2) cell-center coordinates in meters
        step: cell side in meters
        nx / ny: cells along x / y
    """

    cells: FloatArray
    step: float
    nx: int
    ny: int

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.float64)
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @property
    def size(self) -> int:
        return int(self.cells.shape[0])

    def __len__(self) -> int:
        return self.size

    def cell(self, index: int) -> Point:
        x, y = self.cells[index]
        return (float(x), float(y))

    def as_image(self, values: FloatArray) -> FloatArray:
        """Reshape per-cell values to (ny, nx), row 0 at the lowest y."""
        return np.asarray(values).reshape(self.ny, self.nx)

    def __repr__(self) -> str:
        return f"Grid({self.nx}x{self.ny}, step={self.step:g} m)"


def make_grid(scenario: NetworkScenario) -> Grid:
    """
    Build the evaluation grid of a scenario.

    Cell centers sit at (x_min + (i + 0.5) step, y_min + (j + 0.5) step).
    """
    area = scenario.area
    step = scenario.grid_step_m
    nx = int(round(area.width / step))
    ny = int(round(area.height / step))
    xs = area.x_min + (np.arange(nx) + 0.5) * step
    ys = area.y_min + (np.arange(ny) + 0.5) * step
    xx, yy = np.meshgrid(xs, ys)
    cells = np.column_stack([xx.ravel(), yy.ravel()])
    return Grid(cells=cells, step=step, nx=nx, ny=ny)
