import json
import logging
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from pydantic import BaseModel

from app.domain.entities import RunManifest
from app.shared.interfaces.repository import IArtifactRepository
from app.shared.shared_exceptions import ArtifactIOException

logger = logging.getLogger(__name__)

MANIFEST_FILE = "manifest.json"
CSV_FLOAT_FORMAT = "%.6g"


class ArtifactRepository(IArtifactRepository):
    """Concrete artifact store writing into a local directory."""

    def __init__(self, output_dir: str | Path):
        self._output_dir = Path(output_dir)
        self._files: list[str] = []
        try:
            self._output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ArtifactIOException(str(self._output_dir), str(e)) from e

    @property
    def output_dir(self) -> Path:
        return self._output_dir

    @property
    def files(self) -> list[str]:
        return list(self._files)

    def _write(self, name: str, data: bytes) -> Path:
        path = self._output_dir / name
        try:
            path.write_bytes(data)
        except OSError as e:
            raise ArtifactIOException(str(path), str(e)) from e
        if name not in self._files:
            self._files.append(name)
        logger.debug("Wrote %s (%d bytes)", path, len(data))
        return path

    def write_table(self, name: str, frame: pd.DataFrame) -> Path:
        text = frame.to_csv(
            index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n"
        )
        return self._write(name, text.encode("utf-8"))

    def write_text(self, name: str, text: str) -> Path:
        return self._write(name, text.encode("utf-8"))

    def write_json(self, name: str, payload: Any) -> Path:
        if isinstance(payload, BaseModel):
            text = payload.model_dump_json(indent=2)
        else:
            text = json.dumps(payload, indent=2, sort_keys=True)
        return self._write(name, (text + "\n").encode("utf-8"))

    def write_image(self, name: str, image: np.ndarray) -> Path:
        pixels = np.ascontiguousarray(image, dtype=np.uint8)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise ArtifactIOException(name, f"expected an RGB image, got {pixels.shape}")
        height, width = pixels.shape[:2]
        header = f"P6\n{width} {height}\n255\n".encode("ascii")
        return self._write(name, header + pixels.tobytes())

    def write_manifest(self, manifest: RunManifest) -> Path:
        for name in self._files:
            manifest.record(name)
        manifest.record(MANIFEST_FILE)
        return self.write_json(MANIFEST_FILE, manifest.to_dict())
