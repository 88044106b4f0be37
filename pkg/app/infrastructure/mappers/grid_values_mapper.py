import numpy as np
import pandas as pd

from app.domain.entities import Grid
from app.shared.interfaces.mapper import IExportMapper
from app.shared.types import FloatArray


class GridValuesMapper(IExportMapper[tuple[Grid, FloatArray], pd.DataFrame]):
    """Per-cell values -> ``x_m,y_m,<column>`` table in grid order."""

    def __init__(self, column: str):
        self.column = column

    def to_persistence(self, domain_entity: tuple[Grid, FloatArray]) -> pd.DataFrame:
        grid, values = domain_entity
        return pd.DataFrame(
            {
                "x_m": grid.cells[:, 0],
                "y_m": grid.cells[:, 1],
                self.column: np.asarray(values, dtype=np.float64),
            }
        )


class HeatmapMapper(IExportMapper[tuple[Grid, FloatArray], np.ndarray]):
    """
    Per-cell values -> (ny, nx, 3) uint8 grayscale image, north up.

    Finite values are scaled linearly between their min and max;
    cells without signal are black.
    """

    def to_persistence(self, domain_entity: tuple[Grid, FloatArray]) -> np.ndarray:
        grid, values = domain_entity
        image = np.flipud(grid.as_image(values))
        finite = np.isfinite(image)
        levels = np.zeros(image.shape, dtype=np.uint8)
        if np.any(finite):
            low, high = image[finite].min(), image[finite].max()
            span = high - low if high > low else 1.0
            scaled = np.clip((image - low) / span, 0.0, 1.0)
            levels[finite] = np.round(32 + 223 * scaled[finite]).astype(np.uint8)
        return np.repeat(levels[:, :, None], 3, axis=2)
