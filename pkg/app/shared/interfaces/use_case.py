"""
Use Case Interface.

This module defines the generic use case interface following Clean Architecture.

Use cases represent the application's pipelines and orchestrate the flow of
data between the domain services and the outer layers (CLI, artifact files).

Key Principles:
- Single Responsibility: Each use case runs one pipeline
- Dependency Inversion: Use cases never touch files or the console
- Testability: Requests carry every input, responses every result
- Clear contract: Request -> Use Case -> Response
"""

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

# Generic types for request and response
TRequest = TypeVar("TRequest")
TResponse = TypeVar("TResponse")


class IUseCase(ABC, Generic[TRequest, TResponse]):
    """
    Generic Use Case Interface.

    Type Parameters:
        TRequest: The input type (request DTO)
        TResponse: The output type (response DTO)

    Usage:
        class SelectBeamsUseCase(IUseCase[SelectBeamsRequest, SelectBeamsResponse]):
            def execute(self, request: SelectBeamsRequest) -> SelectBeamsResponse:
                context = prepare_simulation(request.scenario, request.options)
                ...

    Notes:
        - Use cases are synchronous; parallelism lives in the domain services
        - Use cases should not contain CLI or file-format details
    """

    @abstractmethod
    def execute(self, request: TRequest) -> TResponse:
        """
        Execute the use case with the given request.

        Args:
            request: The input data

        Returns:
            The result of the pipeline

        Raises:
            DomainError: For invariant violations
        """
        pass
