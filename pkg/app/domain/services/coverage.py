"""
Grid-level evaluation: SNR fields, coverage probability, relative gain maps
and threshold sweeps.
"""

import math
from collections.abc import Sequence

import numpy as np

from app.shared.types import FloatArray
from app.shared.utils import linear_to_db

from ..entities import (
    BeamPowerTable,
    CoverageReport,
    IndependentBeamPolicy,
    JointBeamPlan,
    PlanScheme,
    SnrField,
    SnrScheme,
)
from ..exceptions import EmptyInputError, GridMismatchError, InvalidValueError
from ..value_objects import ResourceBudget
from .selection import serving_tuple_indices
from .snr import joint_closed_snr, phase_row_snrs


def snr_field(
    table: BeamPowerTable,
    plan: JointBeamPlan,
    scheme: SnrScheme,
    policy: IndependentBeamPolicy = IndependentBeamPolicy.SERVING,
) -> SnrField:
    """
    Evaluate one scheme at every cell.

    - joint_fixed: max over plan tuples of B * sum_b T_b / N0
    - joint_enhanced: sum over the phase rows of tuple i of
      |sum over its active BSs of a_b e^{i theta_b}|^2 / N0, i being the tuple
      serving the cell
    - independent: R(g) * T_k / N0 with R(g) = reps_i * N_joint / N_ind

    Raises:
        InvalidValueError: If joint_enhanced is asked of a plan that is not enhanced
    """
    n_ind = table.num_beams
    n_joint = plan.n_joint
    cells = np.arange(table.num_cells)
    serving = serving_tuple_indices(table, plan)
    plan_reps = np.asarray(plan.reps_per_tuple, dtype=np.float64)

    if scheme is SnrScheme.JOINT_FIXED:
        combined = np.stack([table.combined_power(t) for t in plan.tuples])
        repetitions = np.full(table.num_cells, float(table.num_bs))
        linear = joint_closed_snr(combined[serving, cells], repetitions, table.noise_mw)
        budget = ResourceBudget.matched(table.num_bs, n_ind, n_joint)

    elif scheme is SnrScheme.JOINT_ENHANCED:
        if plan.scheme is not PlanScheme.ENHANCED or plan.alpha is None:
            raise InvalidValueError("plan", "joint_enhanced needs an enhanced plan")
        linear = np.zeros(table.num_cells, dtype=np.float64)
        for index, (beam_tuple, active, book) in enumerate(
            zip(plan.tuples, plan.active_sets, plan.phase_books)
        ):
            region = serving == index
            if not region.any():
                continue
            amplitudes = table.tuple_amplitudes(beam_tuple, active)[:, region].T
            per_row = phase_row_snrs(amplitudes, book, table.noise_mw)
            linear[region] = per_row.sum(axis=1)
        repetitions = plan_reps[serving]
        budget = ResourceBudget(n_ind, n_joint, plan.total_transmissions / n_ind)

    else:
        repetitions = plan_reps[serving] * n_joint / n_ind
        if policy is IndependentBeamPolicy.SERVING:
            tuples = np.asarray(plan.tuples, dtype=np.int64)
            beams = tuples[serving, table.closest]
            term = table.closest_terms(beams)
        else:
            term = table.best_closest_power()
        linear = joint_closed_snr(term, repetitions, table.noise_mw)
        budget = ResourceBudget(n_ind, n_joint, plan.total_transmissions / n_ind)

    return SnrField(
        scheme=scheme,
        values_db=linear_to_db(linear),
        budget=budget,
        repetitions=repetitions,
        serving=serving,
    )


def reference_independent_snr_db(
    table: BeamPowerTable, repetitions: float
) -> FloatArray:
    """Best-beam independent SNR of the closest BS, without a joint plan."""
    return linear_to_db(
        joint_closed_snr(table.best_closest_power(), repetitions, table.noise_mw)
    )


def coverage_probability(field: SnrField, gamma_ref_db: float) -> float:
    """
    Fraction of cells whose SNR reaches ``gamma_ref_db`` (step u(0) = 1).

    Raises:
        EmptyInputError: If the field has no cells
    """
    if field.size == 0:
        raise EmptyInputError("coverage of an empty field is undefined")
    return float(np.mean(field.values_db >= gamma_ref_db))


def delta_field(joint: SnrField, independent: SnrField) -> FloatArray:
    """
    Per-cell gain joint - independent in dB.

    Cells with no signal in either scheme get 0; cells with signal only in the
    joint scheme get +inf.

    Raises:
        GridMismatchError: If the fields differ in size or resource budget
    """
    if joint.size != independent.size:
        raise GridMismatchError(
            f"fields cover {joint.size} and {independent.size} cells"
        )
    if (joint.budget.n_ind, joint.budget.n_joint) != (
        independent.budget.n_ind,
        independent.budget.n_joint,
    ):
        raise GridMismatchError("fields were evaluated under different budgets")
    with np.errstate(invalid="ignore"):
        delta = joint.values_db - independent.values_db
    both_silent = np.isneginf(joint.values_db) & np.isneginf(independent.values_db)
    delta[both_silent] = 0.0
    return delta


def threshold_sweep(
    fields: Sequence[SnrField], thresholds_db: Sequence[float]
) -> CoverageReport:
    """
    Coverage fraction of every field at every threshold.

    Raises:
        EmptyInputError: If no field or no threshold is given
        InvalidValueError: If thresholds are not strictly increasing or labels repeat
    """
    if not fields:
        raise EmptyInputError("threshold sweep needs at least one field")
    if not thresholds_db:
        raise EmptyInputError("threshold sweep needs at least one threshold")
    thresholds = tuple(float(t) for t in thresholds_db)
    if any(math.isnan(t) for t in thresholds):
        raise InvalidValueError("thresholds_db", "NaN threshold")

    curves: dict[str, tuple[float, ...]] = {}
    for field in fields:
        if field.label in curves:
            raise InvalidValueError("fields", f"duplicate label '{field.label}'")
        curves[field.label] = tuple(coverage_probability(field, t) for t in thresholds)
    return CoverageReport(thresholds_db=thresholds, curves=curves)
