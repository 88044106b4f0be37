"""
RunManifest Entity.

Provenance record written next to every set of CLI outputs.
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Any

from ..exceptions import InvalidValueError

HASH_HEX_LENGTH = 64


@dataclass
class RunManifest:
    """
    Attributes:
        scenario_hash: sha256 hex digest of the canonical scenario document
        command: CLI subcommand that produced the outputs
        parameters: effective options of the run
        output_files: file names written, in write order
        tool_version: package version
        timestamp: UTC time the manifest was created (ISO 8601)
    """

    scenario_hash: str
    command: str
    parameters: dict[str, Any]
    tool_version: str
    output_files: list[str] = field(default_factory=list)
    timestamp: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds")
    )

    def __post_init__(self):
        if len(self.scenario_hash) != HASH_HEX_LENGTH:
            raise InvalidValueError("scenario_hash", "expected a sha256 hex digest")
        if not self.command:
            raise InvalidValueError("command", "cannot be empty")

    def record(self, file_name: str) -> None:
        if file_name not in self.output_files:
            self.output_files.append(file_name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "scenario_hash": self.scenario_hash,
            "command": self.command,
            "parameters": self.parameters,
            "output_files": list(self.output_files),
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
        }
