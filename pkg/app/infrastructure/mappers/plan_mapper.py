from app.domain.entities import JointBeamPlan
from app.shared.interfaces.mapper import IExportMapper


def _phase(value_in_pi: float) -> str:
    return f"{value_in_pi:.6g}"


class PlanMapper(IExportMapper[JointBeamPlan, str]):
    """
    Plan as a text table: one row per tuple, one beam column per BS.

    Beams are 0-based DFT indices, '-' marks a BS that does not transmit the
    tuple; phase rows are in units of pi.
    """

    def to_persistence(self, domain_entity: JointBeamPlan) -> str:
        plan = domain_entity
        bs_columns = [f"BS{b}" for b in range(1, plan.num_bs + 1)]
        lines = [
            f"# scheme: {plan.scheme.value}",
            f"# num_bs: {plan.num_bs}",
            f"# n_joint: {plan.n_joint}",
            f"# total_transmissions: {plan.total_transmissions}",
        ]
        if plan.alpha is not None:
            lines.append(f"# alpha: {plan.alpha:g}")
        lines.append(
            "# beams: 0-based DFT index per BS, '-' = not transmitting; phases in units of pi"
        )
        header = ["tuple", *bs_columns, "reps", "active", "phase_rows"]
        lines.append("\t".join(header))
        for index, (beam_tuple, reps, active, book) in enumerate(
            zip(plan.tuples, plan.reps_per_tuple, plan.active_sets, plan.phase_books)
        ):
            beams = [
                str(beam) if b + 1 in active else "-" for b, beam in enumerate(beam_tuple)
            ]
            rows = " ".join(
                "(" + ",".join(_phase(v) for v in row) + ")"
                for row in book.in_units_of_pi()
            )
            active_text = ",".join(str(b) for b in active)
            lines.append("\t".join([str(index), *beams, str(reps), active_text, rows]))
        return "\n".join(lines) + "\n"
