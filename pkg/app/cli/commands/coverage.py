import click

from app.application.dto import SweepCoverageRequest
from app.application.use_cases import SweepCoverageUseCase
from app.cli.command_run import resolve_gamma_ref, start_run
from app.cli.options import (
    alpha_option,
    common_options,
    gamma_ref_option,
    independent_beam_option,
    n_select_option,
    thresholds_option,
)
from app.domain.entities import IndependentBeamPolicy
from app.infrastructure.mappers import coverage_table


@click.command("coverage")
@common_options
@thresholds_option
@gamma_ref_option
@alpha_option
@n_select_option
@independent_beam_option
def coverage_command(
    config_path, output_dir, threads, thresholds, gamma_ref_db, alpha, n_select, policy
):
    """Coverage probability versus threshold (coverage.csv)."""
    gamma_ref_db = resolve_gamma_ref(gamma_ref_db)
    run = start_run(
        "coverage",
        config_path,
        output_dir,
        threads,
        {
            "thresholds_db": thresholds,
            "gamma_ref_db": gamma_ref_db,
            "alpha": alpha,
            "n_select": n_select,
            "independent_beam": policy,
        },
    )
    response = SweepCoverageUseCase().execute(
        SweepCoverageRequest(
            scenario=run.scenario,
            thresholds_db=thresholds,
            gamma_ref_db=gamma_ref_db,
            alpha=alpha,
            policy=IndependentBeamPolicy(policy),
            n_select=n_select,
            options=run.options,
        )
    )
    run.repository.write_table("coverage.csv", coverage_table(response.report))
    run.finish()
