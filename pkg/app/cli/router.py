import click

from app.cli.commands import (
    compare_command,
    coverage_command,
    field_command,
    fringe_command,
    select_command,
)
from app.config.settings import get_settings

from .group import SsbcovGroup, configure_logging


@click.group(cls=SsbcovGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(get_settings().VERSION, prog_name="ssbcov")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr.")
def cli(verbose: bool):
    """SSB coverage with independent and joint multi-BS transmission."""
    configure_logging("DEBUG" if verbose else get_settings().LOG_LEVEL)


# ===== CAMPOS DE SNR =====
cli.add_command(field_command)
cli.add_command(compare_command)
cli.add_command(coverage_command)

# ===== SELECCIÓN DE HACES =====
cli.add_command(select_command)

# ===== INTERFERENCIA ENTRE DOS BS =====
cli.add_command(fringe_command)
