"""
Application Layer Module.

This layer contains the use cases (simulation pipelines) and DTOs.

The application layer:
- Builds validated scenarios from configuration documents
- Prepares the shared simulation context (grid, codebooks, power table)
- Implements one use case per CLI pipeline
- Uses DTOs for input/output

Structure:
    application/
    ├── use_cases/     # Use case implementations
    ├── services/      # Scenario building and simulation context
    ├── dto/           # Data Transfer Objects
    └── __init__.py    # This file
"""
