"""
Per-invocation plumbing shared by the subcommands: settings resolution,
scenario loading, artifact store and manifest.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from app.application.dto import SimulationOptions
from app.config.settings import get_settings
from app.domain.entities import NetworkScenario, RunManifest
from app.infrastructure.mappers import scenario_hash
from app.infrastructure.repositories import ArtifactRepository, ScenarioRepository

logger = logging.getLogger(__name__)


@dataclass
class CommandRun:
    command: str
    scenario: NetworkScenario
    repository: ArtifactRepository
    options: SimulationOptions
    manifest: RunManifest

    def finish(self) -> Path:
        path = self.repository.write_manifest(self.manifest)
        logger.info(
            "%s: wrote %s to %s",
            self.command,
            ", ".join(self.repository.files),
            self.repository.output_dir,
        )
        return path


def _jsonable(value: Any) -> Any:
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, list | tuple):
        return [_jsonable(v) for v in value]
    return value


def start_run(
    command: str,
    config_path: Path,
    output_dir: Path | None,
    threads: int | None,
    parameters: dict[str, Any],
) -> CommandRun:
    """
    Load the scenario and open the output directory.

    Raises:
        ArtifactIOException: If the config cannot be read or the output
            directory cannot be created
        ConfigurationException: If the config is malformed or invalid
    """
    settings = get_settings()
    scenario = ScenarioRepository().load(config_path)
    options = SimulationOptions(
        threads=threads or settings.THREADS,
        memory_budget_bytes=settings.channel_memory_budget_bytes or None,
        cell_block_size=settings.CELL_BLOCK_SIZE,
        tuple_block_size=settings.TUPLE_BLOCK_SIZE,
    )
    repository = ArtifactRepository(output_dir or settings.OUTPUT_DIR)
    effective = {"config": str(config_path), "threads": options.threads}
    effective.update({key: _jsonable(value) for key, value in parameters.items()})
    manifest = RunManifest(
        scenario_hash=scenario_hash(scenario),
        command=command,
        parameters=effective,
        tool_version=settings.VERSION,
    )
    return CommandRun(command, scenario, repository, options, manifest)


def resolve_gamma_ref(gamma_ref_db: float | None) -> float:
    return get_settings().DEFAULT_GAMMA_REF_DB if gamma_ref_db is None else gamma_ref_db
