"""
Mapper Interface.

This module defines the mapper interfaces for converting between domain
entities and their on-disk representations.

Mappers translate between:
- Domain entities ↔ configuration documents (scenario round trip)
- Domain entities → output tables and texts (CSV frames, plan tables, JSON)

Key Principles:
- Separation of Concerns: Each layer has its own representation
- Explicit Conversion: No automatic mapping, always explicit
- Type Safety: Strongly typed conversions
"""

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

# Generic types for domain and persistence models
TDomain = TypeVar("TDomain")
TPersistence = TypeVar("TPersistence")


class IExportMapper(ABC, Generic[TDomain, TPersistence]):
    """
    One-way mapper for outputs that are never read back.

    Type Parameters:
        TDomain: The domain entity type
        TPersistence: The output representation (DataFrame, str, pydantic model)
    """

    @abstractmethod
    def to_persistence(self, domain_entity: TDomain) -> TPersistence:
        """
        Convert from domain entity to its output representation.

        Args:
            domain_entity: The domain entity

        Returns:
            The persistence representation
        """
        pass


class IMapper(IExportMapper[TDomain, TPersistence]):
    """
    Bidirectional mapper.

    Usage:
        class ScenarioMapper(IMapper[NetworkScenario, dict[str, Any]]):
            def to_domain(self, persistence_model: dict[str, Any]) -> NetworkScenario:
                return build_scenario(persistence_model)

            def to_persistence(self, domain_entity: NetworkScenario) -> dict[str, Any]:
                return {"bs_positions": ..., ...}

    Notes:
        - Mappers belong in the infrastructure layer
        - to_domain(to_persistence(x)) must reproduce x
    """

    @abstractmethod
    def to_domain(self, persistence_model: TPersistence) -> TDomain:
        """
        Convert from persistence model to domain entity.

        Args:
            persistence_model: The persistence representation

        Returns:
            The domain entity
        """
        pass
