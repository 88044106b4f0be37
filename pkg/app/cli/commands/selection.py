import click

from app.application.dto import SelectBeamsRequest
from app.application.use_cases import SelectBeamsUseCase
from app.cli.command_run import resolve_gamma_ref, start_run
from app.cli.options import common_options, gamma_ref_option, n_select_option
from app.infrastructure.mappers import PlanMapper


@click.command("select")
@common_options
@gamma_ref_option
@n_select_option
def select_command(config_path, output_dir, threads, gamma_ref_db, n_select):
    """Greedy joint beam selection only (plan.txt)."""
    gamma_ref_db = resolve_gamma_ref(gamma_ref_db)
    run = start_run(
        "select",
        config_path,
        output_dir,
        threads,
        {"gamma_ref_db": gamma_ref_db, "n_select": n_select},
    )
    response = SelectBeamsUseCase().execute(
        SelectBeamsRequest(
            scenario=run.scenario,
            gamma_ref_db=gamma_ref_db,
            n_select=n_select,
            options=run.options,
        )
    )
    run.repository.write_text("plan.txt", PlanMapper().to_persistence(response.plan))
    click.echo(
        f"selected {response.plan.n_joint} tuples, "
        f"covered {response.trace.union_coverage:.4f} of the grid"
    )
    run.finish()
