"""
Repository Interface (Port).

Contract for the artifact store that owns a run's output directory.

The repository interface acts as a PORT; the filesystem implementation in the
infrastructure layer is the ADAPTER. The CLI depends on the interface only.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    import numpy as np
    import pandas as pd

    from app.domain.entities import RunManifest


class IArtifactRepository(ABC):
    """
    Artifact store for one run.

    Every write records the file name so the manifest lists all outputs.
    """

    @property
    @abstractmethod
    def output_dir(self) -> Path:
        """Directory all artifacts are written to."""
        pass

    @property
    @abstractmethod
    def files(self) -> list[str]:
        """File names written so far, in write order."""
        pass

    @abstractmethod
    def write_table(self, name: str, frame: "pd.DataFrame") -> Path:
        """Write a CSV table with the fixed float format."""
        pass

    @abstractmethod
    def write_text(self, name: str, text: str) -> Path:
        """Write a UTF-8 text file with '\\n' line endings."""
        pass

    @abstractmethod
    def write_json(self, name: str, payload: Any) -> Path:
        """Write a JSON document (pydantic model or plain data)."""
        pass

    @abstractmethod
    def write_image(self, name: str, image: "np.ndarray") -> Path:
        """Write an 8-bit RGB image as binary PPM."""
        pass

    @abstractmethod
    def write_manifest(self, manifest: "RunManifest") -> Path:
        """Write ``manifest.json`` listing every file written, itself included."""
        pass
