"""
Shared Module.

This module contains code shared across all architectural layers:
- Interfaces: Contracts (Ports) for the artifact store, use cases, mappers
- Types: Common type aliases
- Utils: Unit conversions and format helpers
- Exceptions: Application-level exceptions with their exit codes

The shared module follows the Dependency Rule:
- Can be imported by any layer
- Should not depend on any specific layer

Structure:
    shared/
    ├── interfaces/          # Abstract interfaces (Ports)
    ├── types/               # Common types and type aliases
    ├── utils/               # Generic utility functions
    ├── shared_exceptions/   # Application-level exceptions
    └── __init__.py          # This file
"""
