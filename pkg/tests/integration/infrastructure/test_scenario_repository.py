"""
Integration tests for ScenarioRepository.
"""

import pytest

from app.infrastructure.repositories import ScenarioRepository
from app.shared.shared_exceptions import (
    EXIT_CONFIG,
    ArtifactIOException,
    ConfigurationException,
)


@pytest.mark.integration
class TestScenarioRepository:
    """Test loading scenario documents."""

    def test_load_small(self, small_config_path):
        scenario = ScenarioRepository().load(small_config_path)

        assert scenario.num_bs == 2
        assert scenario.num_antennas == 2

    def test_load_reference_config(self, reference_config_path):
        """Should load the shipped four-BS configuration."""
        scenario = ScenarioRepository().load(reference_config_path)

        assert scenario.num_bs == 4
        assert scenario.calibration_knee_db == 5.0

    def test_missing_file(self, tmp_path):
        """Should map a missing file to the configuration exit code."""
        with pytest.raises(ArtifactIOException) as exc_info:
            ScenarioRepository().load(tmp_path / "nope.toml")

        assert exc_info.value.exit_code == EXIT_CONFIG
        assert "file not found" in str(exc_info.value)

    def test_bad_toml(self, tmp_path):
        """Should report TOML syntax errors with their location."""
        path = tmp_path / "bad.toml"
        path.write_text("a = 1\nb = [\nc = 2\n")

        with pytest.raises(ConfigurationException) as exc_info:
            ScenarioRepository().load(path)

        assert "line" in str(exc_info.value)

    def test_invalid_document(self, tmp_path):
        """Should wrap domain validation errors."""
        path = tmp_path / "bad.toml"
        path.write_text('bs_positions = [[0.0, 0.0]]\nbs_powers_dbm = [0.0]\n')

        with pytest.raises(ConfigurationException):
            ScenarioRepository().load(path)
