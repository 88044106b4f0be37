import click

from app.application.dto import CompareSchemesRequest
from app.application.use_cases import CompareSchemesUseCase
from app.cli.command_run import resolve_gamma_ref, start_run
from app.cli.options import (
    alpha_option,
    common_options,
    gamma_ref_option,
    independent_beam_option,
    n_select_option,
)
from app.domain.entities import IndependentBeamPolicy
from app.infrastructure.mappers import GridValuesMapper, PlanMapper, SummaryMapper


@click.command("compare")
@common_options
@gamma_ref_option
@alpha_option
@n_select_option
@independent_beam_option
def compare_command(config_path, output_dir, threads, gamma_ref_db, alpha, n_select, policy):
    """Relative gain of joint over independent transmission (delta_*.csv)."""
    gamma_ref_db = resolve_gamma_ref(gamma_ref_db)
    run = start_run(
        "compare",
        config_path,
        output_dir,
        threads,
        {
            "gamma_ref_db": gamma_ref_db,
            "alpha": alpha,
            "n_select": n_select,
            "independent_beam": policy,
        },
    )
    response = CompareSchemesUseCase().execute(
        CompareSchemesRequest(
            scenario=run.scenario,
            gamma_ref_db=gamma_ref_db,
            alpha=alpha,
            policy=IndependentBeamPolicy(policy),
            n_select=n_select,
            options=run.options,
        )
    )
    delta_mapper = GridValuesMapper("delta_db")
    plan_mapper = PlanMapper()
    store = run.repository

    store.write_table(
        "delta_fixed.csv", delta_mapper.to_persistence((response.grid, response.delta_fixed))
    )
    plan_text = plan_mapper.to_persistence(response.fixed_plan)
    if response.enhanced_plan is not None and response.delta_enhanced is not None:
        store.write_table(
            "delta_enhanced.csv",
            delta_mapper.to_persistence((response.grid, response.delta_enhanced)),
        )
        plan_text += "\n" + plan_mapper.to_persistence(response.enhanced_plan)
    store.write_text("plan.txt", plan_text)
    summary = SummaryMapper().to_persistence(response)
    store.write_json("summary.json", summary)

    for scheme, total in summary.total_transmissions.items():
        stats = summary.delta[scheme]
        click.echo(
            f"{scheme}: {total} transmissions, max delta {stats.max_db:.2f} dB "
            f"at ({stats.max_location_m[0]:g}, {stats.max_location_m[1]:g}) m"
        )
    run.finish()
