import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any

from app.domain.entities import NetworkScenario
from app.domain.exceptions import DomainError
from app.infrastructure.mappers import ScenarioMapper
from app.shared.shared_exceptions import (
    EXIT_CONFIG,
    ArtifactIOException,
    ConfigurationException,
)

logger = logging.getLogger(__name__)


class ScenarioRepository:
    """Reads scenario documents from TOML files."""

    def __init__(self):
        self._mapper = ScenarioMapper()

    def load_document(self, path: str | Path) -> dict[str, Any]:
        """
        Raises:
            ArtifactIOException: If the file cannot be read (exit code 2)
            ConfigurationException: If the file is not valid TOML
        """
        path = Path(path)
        try:
            raw = path.read_bytes()
        except OSError as e:
            reason = "file not found" if isinstance(e, FileNotFoundError) else str(e)
            raise ArtifactIOException(str(path), reason, exit_code=EXIT_CONFIG) from e
        try:
            return tomllib.loads(raw.decode("utf-8"))
        except (tomllib.TOMLDecodeError, UnicodeDecodeError) as e:
            raise ConfigurationException(str(path), str(e)) from e

    def load(self, path: str | Path) -> NetworkScenario:
        """
        Load and validate a scenario.

        Raises:
            ArtifactIOException: If the file cannot be read
            ConfigurationException: If the document is malformed or invalid
        """
        document = self.load_document(path)
        try:
            scenario = self._mapper.to_domain(document)
        except DomainError as e:
            raise ConfigurationException(str(path), str(e)) from e
        logger.info(
            "Loaded scenario %s: %d BS, N=%d, f=%.3g Hz",
            path,
            scenario.num_bs,
            scenario.num_antennas,
            scenario.carrier_freq_hz,
        )
        return scenario
