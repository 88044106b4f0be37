"""
Joint beam selection.

greedy_select picks joint beam tuples by maximum marginal coverage;
enhanced_plan shrinks each tuple's phase book to the BSs that dominate its
service region.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from app.shared.types import BoolArray, FloatArray, IntArray
from app.shared.utils import linear_to_db

from ..entities import BeamPowerTable, GreedyTrace, JointBeamPlan, PlanScheme
from ..exceptions import AllZeroTermsError, EmptyRegionError, InvalidValueError
from ..value_objects import DominantSet, PhaseBook
from .phasebook import column_phase_book, make_phase_book
from .snr import joint_closed_snr

logger = logging.getLogger(__name__)


def _check_alpha(alpha: float) -> None:
    if not (math.isfinite(alpha) and 0.0 < alpha <= 1.0):
        raise InvalidValueError("alpha", "must lie in (0, 1]")


def tuples_for(table: BeamPowerTable, flat_indices: IntArray) -> IntArray:
    """Beam tuples for lexicographic positions in the full joint codebook."""
    shape = (table.num_beams,) * table.num_bs
    return np.stack(np.unravel_index(flat_indices, shape), axis=1).astype(np.int64)


def coverage_masks(
    table: BeamPowerTable, tuples: IntArray, gamma_ref_db: float
) -> BoolArray:
    """
    (K, G) mask of cells each tuple covers with all B BSs cooperating.

    Sums per-BS powers in ascending BS order, matching
    BeamPowerTable.combined_power bit for bit.
    """
    total = np.zeros((tuples.shape[0], table.num_cells), dtype=np.float64)
    for b in range(table.num_bs):
        total = total + table.powers[b][tuples[:, b]]
    snr = joint_closed_snr(total, table.num_bs, table.noise_mw)
    return linear_to_db(snr) >= gamma_ref_db


def greedy_select(
    table: BeamPowerTable,
    gamma_ref_db: float,
    n_select: int,
    threads: int = 1,
    block_size: int = 64,
) -> tuple[JointBeamPlan, GreedyTrace]:
    """
    Greedy maximum-coverage selection of ``n_select`` joint beam tuples.

    Every iteration scores all not-yet-selected tuples by the number of
    still-uncovered cells they cover and keeps the best one; ties go to the
    lexicographically smallest tuple. Iterations continue at zero gain.
    Tuple blocks are scored in parallel and concatenated in order.

    Raises:
        InvalidValueError: If n_select is outside [1..M^B] or gamma is not finite
    """
    total_tuples = table.tuple_count
    if not 1 <= n_select <= total_tuples:
        raise InvalidValueError(
            "n_select", f"{n_select} is outside [1..{total_tuples}] (N^B)"
        )
    if not math.isfinite(gamma_ref_db):
        raise InvalidValueError("gamma_ref_db", "must be finite")

    starts = range(0, total_tuples, max(1, block_size))

    def score_block(start: int) -> BoolArray:
        flat = np.arange(start, min(start + block_size, total_tuples))
        return coverage_masks(table, tuples_for(table, flat), gamma_ref_db)

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        masks = np.concatenate(list(executor.map(score_block, starts)))

    uncovered = np.ones(table.num_cells, dtype=bool)
    selected: list[int] = []
    gains: list[int] = []
    for iteration in range(n_select):
        counts = (masks & uncovered).sum(axis=1).astype(np.int64)
        counts[selected] = -1
        pick = int(np.argmax(counts))
        selected.append(pick)
        gains.append(int(counts[pick]))
        uncovered &= ~masks[pick]
        logger.debug(
            "Greedy iteration %d: tuple #%d covers %d new cells",
            iteration + 1,
            pick,
            counts[pick],
        )

    tuples = tuple(
        tuple(int(i) for i in row) for row in tuples_for(table, np.asarray(selected))
    )
    book = make_phase_book(table.num_bs)
    plan = JointBeamPlan(
        tuples=tuples,
        reps_per_tuple=(table.num_bs,) * n_select,
        active_sets=(tuple(range(1, table.num_bs + 1)),) * n_select,
        phase_books=(book,) * n_select,
        num_beams=table.num_beams,
        scheme=PlanScheme.FIXED,
    )
    trace = GreedyTrace(marginal_gains=tuple(gains), num_cells=table.num_cells)
    logger.info(
        "Selected %d joint beams; union coverage %.4f at %.2f dB",
        n_select,
        trace.union_coverage,
        gamma_ref_db,
    )
    return plan, trace


def serving_tuple_indices(table: BeamPowerTable, plan: JointBeamPlan) -> IntArray:
    """
    Plan tuple with the largest all-BS combined power at each cell.

    Ties go to the lowest tuple index.
    """
    combined = np.stack([table.combined_power(t) for t in plan.tuples])
    return np.argmax(combined, axis=0).astype(np.int64)


def dominant_mask(terms: FloatArray, alpha: float) -> BoolArray:
    """
    term_b >= alpha * max_j term_j, along axis 0.

    Accepts a (B,) vector or a (B, cells) matrix.
    """
    terms = np.asarray(terms, dtype=np.float64)
    return terms >= alpha * terms.max(axis=0)


def dominant_set(terms: FloatArray, alpha: float) -> DominantSet:
    """
    BSs whose beamformed power is within ``alpha`` of the strongest one.

    Raises:
        InvalidValueError: If alpha is outside (0, 1] or terms are negative
        AllZeroTermsError: If no term is positive
    """
    _check_alpha(alpha)
    terms = np.asarray(terms, dtype=np.float64).reshape(-1)
    if terms.size == 0 or np.any(terms < 0) or not np.all(np.isfinite(terms)):
        raise InvalidValueError("joint_terms", "must be finite and non-negative")
    if terms.max() <= 0:
        raise AllZeroTermsError("every per-BS term is zero")
    members = frozenset(int(b) + 1 for b in np.flatnonzero(dominant_mask(terms, alpha)))
    return DominantSet(members=members, alpha=alpha)


def _phase_columns(
    active: tuple[int, ...], dominant_sets: set[tuple[int, ...]], order: int
) -> tuple[int, ...] | None:
    """
    Column of an order-``order`` book for every active BS, such that the BSs
    of each dominant set sit on distinct columns; None if there is none.

    Backtracks over BSs in ascending order, smallest column first.
    """
    conflicts: dict[int, set[int]] = {bs: set() for bs in active}
    for members in dominant_sets:
        for bs in members:
            conflicts[bs].update(other for other in members if other != bs)
    columns: dict[int, int] = {}

    def place(position: int) -> bool:
        if position == len(active):
            return True
        bs = active[position]
        taken = {columns[other] for other in conflicts[bs] if other in columns}
        for column in range(order):
            if column in taken:
                continue
            columns[bs] = column
            if place(position + 1):
                return True
            del columns[bs]
        return False

    return tuple(columns[bs] for bs in active) if place(0) else None


def enhanced_plan(
    table: BeamPowerTable,
    base_plan: JointBeamPlan,
    alpha: float,
    strict: bool = False,
) -> JointBeamPlan:
    """
    Reduce each tuple's repetitions to the dominant BSs of its region.

    The region of tuple i is the set of cells it serves; the active set is the
    union of the dominant sets over the region. Every active BS gets a column
    of an orthogonal book of order reps_i, so that the BSs dominant at any one
    served cell sit on pairwise orthogonal columns. reps_i starts at the
    largest dominant-set size and grows only when no such assignment exists.
    Beams are reused from ``base_plan``.

    A tuple serving no cell keeps a single repetition from its strongest BS
    unless ``strict`` is set.

    Raises:
        InvalidValueError: If alpha is outside (0, 1]
        EmptyRegionError: If strict and a tuple serves no cell
    """
    _check_alpha(alpha)
    serving = serving_tuple_indices(table, base_plan)
    reps_per_tuple: list[int] = []
    active_sets: list[tuple[int, ...]] = []
    phase_books: list[PhaseBook] = []

    for index, beam_tuple in enumerate(base_plan.tuples):
        terms = table.tuple_terms(beam_tuple)
        region = terms[:, serving == index]
        region = region[:, region.max(axis=0, initial=0.0) > 0]
        if region.shape[1] == 0:
            if strict:
                raise EmptyRegionError(index)
            logger.warning("Joint beam %d serves no cell; keeping one repetition", index)
            strongest = int(np.argmax(terms.sum(axis=1))) + 1
            reps_per_tuple.append(1)
            active_sets.append((strongest,))
            phase_books.append(make_phase_book(1))
            continue

        mask = dominant_mask(region, alpha)
        active = tuple(int(b) + 1 for b in np.flatnonzero(mask.any(axis=1)))
        dominant_sets = {
            tuple(int(b) + 1 for b in np.flatnonzero(row))
            for row in np.unique(mask.T, axis=0)
        }
        reps = max(len(members) for members in dominant_sets)
        columns = _phase_columns(active, dominant_sets, reps)
        while columns is None:
            reps += 1
            columns = _phase_columns(active, dominant_sets, reps)
        if reps > max(len(members) for members in dominant_sets):
            logger.debug(
                "Joint beam %d needs %d repetitions to separate its dominant BSs",
                index,
                reps,
            )
        reps_per_tuple.append(reps)
        active_sets.append(active)
        phase_books.append(column_phase_book(reps, columns))

    plan = JointBeamPlan(
        tuples=base_plan.tuples,
        reps_per_tuple=tuple(reps_per_tuple),
        active_sets=tuple(active_sets),
        phase_books=tuple(phase_books),
        num_beams=base_plan.num_beams,
        scheme=PlanScheme.ENHANCED,
        alpha=alpha,
    )
    logger.info(
        "Enhanced plan (alpha=%g): %d transmissions instead of %d",
        alpha,
        plan.total_transmissions,
        base_plan.total_transmissions,
    )
    return plan
