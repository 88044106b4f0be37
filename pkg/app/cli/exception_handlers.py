"""
Exception handlers for the command-line surface.

Translate domain, application and click exceptions into a message on stderr
and a process exit code.
"""

import logging

import click

from app.domain.exceptions import DomainError
from app.shared.shared_exceptions import (
    EXIT_RUNTIME,
    EXIT_USAGE,
    ApplicationException,
)

logger = logging.getLogger(__name__)


def _error(message: str) -> None:
    click.echo(f"Error: {message}", err=True)


def application_exception_handler(exc: ApplicationException) -> int:
    logger.debug("Application error: %s", exc.details)
    _error(exc.message)
    return exc.exit_code


def domain_exception_handler(exc: DomainError) -> int:
    _error(str(exc))
    return EXIT_RUNTIME


def click_exception_handler(exc: click.ClickException) -> int:
    exc.show()
    return EXIT_USAGE


def handle_exception(exc: BaseException) -> int:
    """Report ``exc`` and return the exit code it maps to."""
    if isinstance(exc, click.ClickException):
        return click_exception_handler(exc)
    if isinstance(exc, click.Abort):
        _error("aborted")
        return EXIT_USAGE
    if isinstance(exc, ApplicationException):
        return application_exception_handler(exc)
    if isinstance(exc, DomainError):
        return domain_exception_handler(exc)
    if isinstance(exc, MemoryError):
        _error("out of memory; lower CHANNEL_MEMORY_BUDGET_MB or the grid size")
        return EXIT_RUNTIME
    logger.exception("Unexpected error")
    _error(f"unexpected {type(exc).__name__}: {exc}")
    return EXIT_RUNTIME
