"""
Command group with exit-code mapping.
"""

import logging
import sys

import click

from app.shared.shared_exceptions import EXIT_OK

from .exception_handlers import handle_exception


class SsbcovGroup(click.Group):
    """
    click Group whose ``main`` maps every failure to the tool's exit codes:
    0 ok, 1 usage, 2 configuration, 3 runtime.
    """

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            result = super().main(
                args, prog_name, complete_var, standalone_mode=False, **extra
            )
        except Exception as exc:
            code = handle_exception(exc)
        else:
            code = result if isinstance(result, int) else EXIT_OK
        if standalone_mode:
            sys.exit(code)
        return code


def configure_logging(level: str) -> None:
    logging.getLogger().setLevel(level.upper())
