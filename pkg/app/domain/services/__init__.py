"""
Domain services: pure numerical operations over the domain entities.
"""

from .channel import (
    channel_field,
    channel_table_bytes,
    closest_bs_index,
    closest_bs_indices,
    iter_channel_blocks,
    los_channel,
    los_channel_block,
)
from .coverage import (
    coverage_probability,
    delta_field,
    reference_independent_snr_db,
    snr_field,
    threshold_sweep,
)
from .phasebook import column_phase_book, dft_codebook, make_phase_book
from .selection import (
    dominant_mask,
    dominant_set,
    enhanced_plan,
    greedy_select,
    serving_tuple_indices,
)
from .snr import (
    beam_power_table,
    beamformed_amplitudes,
    best_beam_index,
    delta_snr,
    joint_closed_snr,
    joint_terms,
    phase_row_snrs,
    snr_independent,
    snr_joint,
    snr_joint_closed,
    snr_joint_combined,
)

__all__ = [
    "los_channel",
    "los_channel_block",
    "channel_field",
    "channel_table_bytes",
    "iter_channel_blocks",
    "closest_bs_index",
    "closest_bs_indices",
    "dft_codebook",
    "make_phase_book",
    "column_phase_book",
    "beamformed_amplitudes",
    "joint_terms",
    "snr_joint",
    "snr_joint_combined",
    "snr_joint_closed",
    "snr_independent",
    "best_beam_index",
    "delta_snr",
    "beam_power_table",
    "joint_closed_snr",
    "phase_row_snrs",
    "greedy_select",
    "serving_tuple_indices",
    "dominant_mask",
    "dominant_set",
    "enhanced_plan",
    "snr_field",
    "reference_independent_snr_db",
    "coverage_probability",
    "delta_field",
    "threshold_sweep",
]
