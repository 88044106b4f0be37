"""
Application Layer Exceptions.

This module contains exceptions that bridge the gap between domain exceptions
and the command-line presentation layer.

These exceptions are raised by use cases and infrastructure adapters and are
mapped to process exit codes in the CLI layer.

Exception Hierarchy:
    ApplicationException (base)
    ├── ConfigurationException  -> exit 2
    └── ArtifactIOException     -> exit 3 (2 when reading the config)
"""

from typing import Any

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_RUNTIME = 3


class ApplicationException(Exception):
    """
    Base exception for application layer errors.

    All application-level exceptions should inherit from this.
    """

    exit_code: int = EXIT_RUNTIME

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class ConfigurationException(ApplicationException):
    """
    Exception raised when the scenario document is malformed or invalid.

    Maps to exit code 2. The message carries the file path and, when the
    parser provides it, the line and column.
    """

    exit_code = EXIT_CONFIG

    def __init__(self, path: str, reason: str, details: dict[str, Any] | None = None):
        message = f"{path}: {reason}"
        super().__init__(message, {"path": path, **(details or {})})


class ArtifactIOException(ApplicationException):
    """
    Exception raised when a file cannot be read or written.

    Maps to exit code 3, or 2 when the missing file is the configuration.
    """

    def __init__(self, path: str, reason: str, exit_code: int = EXIT_RUNTIME):
        self.exit_code = exit_code
        super().__init__(f"I/O error on '{path}': {reason}", {"path": path})


__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_CONFIG",
    "EXIT_RUNTIME",
    "ApplicationException",
    "ConfigurationException",
    "ArtifactIOException",
]
