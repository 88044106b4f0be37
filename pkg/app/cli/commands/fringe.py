import click

from app.application.dto import TraceFringeRequest
from app.application.use_cases import TraceFringeUseCase
from app.cli.command_run import start_run
from app.cli.options import common_options, samples_option
from app.config.settings import get_settings
from app.infrastructure.mappers import FringeProfileMapper


@click.command("fringe")
@common_options
@samples_option
def fringe_command(config_path, output_dir, threads, samples_per_wavelength):
    """Two-BS SNR profile along the line joining them (fringe.csv)."""
    if samples_per_wavelength is None:
        samples_per_wavelength = get_settings().FRINGE_SAMPLES_PER_WAVELENGTH
    run = start_run(
        "fringe",
        config_path,
        output_dir,
        threads,
        {"samples_per_wavelength": samples_per_wavelength},
    )
    profile = TraceFringeUseCase().execute(
        TraceFringeRequest(
            scenario=run.scenario,
            samples_per_wavelength=samples_per_wavelength,
            options=run.options,
        )
    )
    run.repository.write_table("fringe.csv", FringeProfileMapper().to_persistence(profile))
    run.finish()
