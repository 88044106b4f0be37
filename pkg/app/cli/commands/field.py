import click

from app.application.dto import ComputeFieldRequest
from app.application.use_cases import ComputeFieldUseCase
from app.cli.command_run import resolve_gamma_ref, start_run
from app.cli.options import (
    alpha_option,
    common_options,
    gamma_ref_option,
    independent_beam_option,
    n_select_option,
    ppm_option,
    scheme_option,
)
from app.config.settings import get_settings
from app.domain.entities import IndependentBeamPolicy, SnrScheme
from app.infrastructure.mappers import GridValuesMapper, HeatmapMapper


@click.command("field")
@common_options
@scheme_option
@gamma_ref_option
@alpha_option
@n_select_option
@independent_beam_option
@ppm_option
def field_command(
    config_path, output_dir, threads, scheme, gamma_ref_db, alpha, n_select, policy, ppm
):
    """Absolute SNR of one scheme over the grid (snr_<scheme>.csv)."""
    gamma_ref_db = resolve_gamma_ref(gamma_ref_db)
    alpha = get_settings().DEFAULT_ALPHA if alpha is None else alpha
    run = start_run(
        "field",
        config_path,
        output_dir,
        threads,
        {
            "scheme": scheme,
            "gamma_ref_db": gamma_ref_db,
            "alpha": alpha,
            "n_select": n_select,
            "independent_beam": policy,
            "ppm": ppm,
        },
    )
    response = ComputeFieldUseCase().execute(
        ComputeFieldRequest(
            scenario=run.scenario,
            scheme=SnrScheme(scheme),
            gamma_ref_db=gamma_ref_db,
            alpha=alpha,
            policy=IndependentBeamPolicy(policy),
            n_select=n_select,
            options=run.options,
        )
    )
    values = (response.grid, response.field.values_db)
    run.repository.write_table(
        f"snr_{scheme}.csv", GridValuesMapper("snr_db").to_persistence(values)
    )
    if ppm:
        run.repository.write_image(
            f"snr_{scheme}.ppm", HeatmapMapper().to_persistence(values)
        )
    run.finish()
