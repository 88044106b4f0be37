from .artifact_repository import MANIFEST_FILE, ArtifactRepository
from .scenario_repository import ScenarioRepository

__all__ = ["ArtifactRepository", "ScenarioRepository", "MANIFEST_FILE"]
