"""
Shared Interfaces Module.

This module contains the interface definitions (Ports) following Clean
Architecture and Hexagonal Architecture (Ports & Adapters) patterns.

Available Interfaces:
- Repository Interfaces: Artifact persistence contract
- Use Case Interfaces: Pipeline contract
- Mapper Interfaces: Data conversion contracts
"""

from .mapper import IExportMapper, IMapper
from .repository import IArtifactRepository
from .use_case import IUseCase

__all__ = [
    # Repository interfaces
    "IArtifactRepository",
    # Use case interfaces
    "IUseCase",
    # Mapper interfaces
    "IMapper",
    "IExportMapper",
]
