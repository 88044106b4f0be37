"""
Integration tests for ArtifactRepository.
"""

import json

import numpy as np
import pandas as pd
import pytest

from app.domain.entities import RunManifest
from app.infrastructure.repositories import MANIFEST_FILE, ArtifactRepository
from app.shared.shared_exceptions import EXIT_RUNTIME, ArtifactIOException


@pytest.fixture
def repository(tmp_path):
    return ArtifactRepository(tmp_path / "out")


@pytest.mark.integration
class TestArtifactRepository:
    """Test writing artifacts to disk."""

    def test_creates_output_directory(self, tmp_path):
        """Should create nested output directories."""
        repo = ArtifactRepository(tmp_path / "a" / "b")

        assert repo.output_dir.is_dir()

    def test_write_table_format(self, repository):
        """Should write a header row, six significant digits and LF endings."""
        frame = pd.DataFrame({"x_m": [0.5, 1.5], "snr_db": [1 / 3, -np.inf]})

        path = repository.write_table("snr.csv", frame)

        assert path.read_bytes() == b"x_m,snr_db\n0.5,0.333333\n1.5,-inf\n"

    def test_write_json_plain_dict(self, repository):
        path = repository.write_json("data.json", {"b": 1, "a": 2})

        text = path.read_text()
        assert text.endswith("\n")
        assert list(json.loads(text)) == ["a", "b"]

    def test_write_image_header(self, repository):
        """Should write a binary P6 PPM."""
        image = np.zeros((2, 3, 3), dtype=np.uint8)

        path = repository.write_image("map.ppm", image)

        data = path.read_bytes()
        assert data.startswith(b"P6\n3 2\n255\n")
        assert len(data) == len(b"P6\n3 2\n255\n") + 18

    def test_write_image_rejects_gray(self, repository):
        with pytest.raises(ArtifactIOException):
            repository.write_image("map.ppm", np.zeros((2, 3), dtype=np.uint8))

    def test_manifest_lists_every_file(self, repository):
        """Should list data files and itself."""
        repository.write_text("plan.txt", "# plan\n")
        repository.write_table("a.csv", pd.DataFrame({"v": [1.0]}))
        manifest = RunManifest("0" * 64, "select", {"threads": 1}, "1.0.0")

        repository.write_manifest(manifest)

        stored = json.loads((repository.output_dir / MANIFEST_FILE).read_text())
        assert stored["output_files"] == ["plan.txt", "a.csv", MANIFEST_FILE]
        assert repository.files == stored["output_files"]

    def test_unwritable_directory(self, tmp_path):
        """Should raise a runtime-class error when the target is a file."""
        blocker = tmp_path / "file"
        blocker.write_text("x")

        with pytest.raises(ArtifactIOException) as exc_info:
            ArtifactRepository(blocker / "out")

        assert exc_info.value.exit_code == EXIT_RUNTIME
