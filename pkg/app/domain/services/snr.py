"""
SNR expressions.

Per-location functions take per-BS ChannelVectors, linear powers (mW) and
codebooks; table-level helpers work on BeamPowerTable for whole grids.
All arithmetic is linear; dB conversion only happens in delta_snr and at the
coverage layer.
"""

import math
from collections.abc import Iterable, Sequence

import numpy as np

from app.shared.types import BeamTuple, ComplexArray, FloatArray, IntArray

from ..entities import BeamPowerTable, ChannelVector
from ..exceptions import (
    DegenerateClosestError,
    DimensionMismatchError,
    InvalidValueError,
    OutOfRangeError,
)
from ..value_objects import BeamCodebook, JointConfig, PhaseBook, ResourceBudget


def _check_noise(noise_mw: float) -> None:
    if not (math.isfinite(noise_mw) and noise_mw > 0):
        raise InvalidValueError("noise", "must be positive and finite")


def beamformed_amplitudes(
    channels: Sequence[ChannelVector],
    powers_mw: Sequence[float],
    codebooks: Sequence[BeamCodebook],
    beam_indices: BeamTuple,
) -> ComplexArray:
    """
    Per-BS received amplitude sqrt(rho_b) h_b^H f_b.

    Raises:
        DimensionMismatchError: If per-BS inputs disagree in length
    """
    num_bs = len(channels)
    for what, items in (
        ("powers", powers_mw),
        ("codebooks", codebooks),
        ("beam_indices", beam_indices),
    ):
        if len(items) != num_bs:
            raise DimensionMismatchError(what, num_bs, len(items))

    amplitudes = np.empty(num_bs, dtype=np.complex128)
    for b, (channel, power, codebook, index) in enumerate(
        zip(channels, powers_mw, codebooks, beam_indices)
    ):
        if codebook.num_antennas != channel.num_antennas:
            raise DimensionMismatchError(
                "beam length", channel.num_antennas, codebook.num_antennas
            )
        amplitudes[b] = math.sqrt(power) * np.vdot(channel.coeffs, codebook.beam(index))
    return amplitudes


def joint_terms(
    channels: Sequence[ChannelVector],
    powers_mw: Sequence[float],
    codebooks: Sequence[BeamCodebook],
    beam_indices: BeamTuple,
) -> FloatArray:
    """Per-BS powers rho_b |h_b^H f_b|^2."""
    amplitudes = beamformed_amplitudes(channels, powers_mw, codebooks, beam_indices)
    return np.abs(amplitudes) ** 2


def snr_joint(
    channels: Sequence[ChannelVector],
    powers_mw: Sequence[float],
    codebooks: Sequence[BeamCodebook],
    config: JointConfig,
    noise_mw: float,
) -> float:
    """SNR of one joint configuration: |sum_b a_b e^{i theta_b}|^2 / N0."""
    _check_noise(noise_mw)
    amplitudes = beamformed_amplitudes(
        channels, powers_mw, codebooks, config.beam_indices
    )
    if len(config.phase_row) != len(amplitudes):
        raise DimensionMismatchError("phase_row", len(amplitudes), len(config.phase_row))
    phases = np.exp(1j * np.asarray(config.phase_row, dtype=np.float64))
    return float(abs(np.sum(amplitudes * phases)) ** 2 / noise_mw)


def snr_joint_combined(
    channels: Sequence[ChannelVector],
    powers_mw: Sequence[float],
    codebooks: Sequence[BeamCodebook],
    beam_indices: BeamTuple,
    phase_book: PhaseBook,
    noise_mw: float,
) -> float:
    """SNR after the UE sums every phase-row repetition of one beam tuple."""
    _check_noise(noise_mw)
    amplitudes = beamformed_amplitudes(channels, powers_mw, codebooks, beam_indices)
    if phase_book.width != len(amplitudes):
        raise DimensionMismatchError("phase_book width", len(amplitudes), phase_book.width)
    per_row = phase_book.amplitudes() @ amplitudes
    return float(np.sum(np.abs(per_row) ** 2) / noise_mw)


def snr_joint_closed(
    channels: Sequence[ChannelVector],
    powers_mw: Sequence[float],
    codebooks: Sequence[BeamCodebook],
    beam_indices: BeamTuple,
    b_effective: int,
    noise_mw: float,
) -> float:
    """Closed form b_effective * sum_b rho_b |h_b^H f_b|^2 / N0."""
    _check_noise(noise_mw)
    if b_effective < 1:
        raise InvalidValueError("b_effective", "must be >= 1")
    terms = joint_terms(channels, powers_mw, codebooks, beam_indices)
    return float(b_effective * np.sum(terms) / noise_mw)


def snr_independent(
    channel_k: ChannelVector,
    power_k_mw: float,
    beam: ComplexArray,
    repetitions: float,
    noise_mw: float,
) -> float:
    """
    Independent-transmission SNR of the closest BS repeated ``repetitions`` times.

    Raises:
        DimensionMismatchError: If the beam length differs from the channel
        InvalidValueError: If repetitions is not positive
    """
    _check_noise(noise_mw)
    beam = np.asarray(beam, dtype=np.complex128).reshape(-1)
    if beam.size != channel_k.num_antennas:
        raise DimensionMismatchError("beam length", channel_k.num_antennas, beam.size)
    if not repetitions > 0:
        raise InvalidValueError("repetitions", "must be positive")
    gain = abs(np.vdot(channel_k.coeffs, beam)) ** 2
    return float(repetitions * power_k_mw * gain / noise_mw)


def best_beam_index(channel: ChannelVector, codebook: BeamCodebook) -> int:
    """Beam maximizing |h^H f|; ties go to the lowest index."""
    if codebook.num_antennas != channel.num_antennas:
        raise DimensionMismatchError(
            "beam length", channel.num_antennas, codebook.num_antennas
        )
    gains = np.abs(channel.coeffs.conj() @ codebook.matrix)
    return int(np.argmax(gains))


def delta_snr(
    joint_terms: Sequence[float] | FloatArray,
    closest_index: int,
    budget: ResourceBudget,
) -> float:
    """
    Relative gain of joint over independent transmission, in dB.

    10 log10(1 + sum_{b != k} term_b / term_k) + 10 log10(N_ind / N_joint)

    Args:
        joint_terms: per-BS rho_b |h_b^H f_b|^2
        closest_index: 1-based index k of the closest BS
        budget: resource accounting of the comparison

    Raises:
        OutOfRangeError: If closest_index is not a valid BS
        DegenerateClosestError: If term_k is zero
    """
    terms = np.asarray(joint_terms, dtype=np.float64)
    if not 1 <= closest_index <= terms.size:
        raise OutOfRangeError("closest_index", closest_index, 1, terms.size)
    term_k = terms[closest_index - 1]
    if term_k <= 0:
        raise DegenerateClosestError(
            f"BS {closest_index} contributes no power; the relative gain is unbounded"
        )
    others = float(np.sum(np.delete(terms, closest_index - 1)))
    return float(10.0 * math.log10(1.0 + others / term_k) + budget.resource_ratio_db)


# ---------------------------------------------------------------- grid level


def beam_power_table(
    powers_mw: Sequence[float],
    codebooks: Sequence[BeamCodebook],
    blocks: Iterable[tuple[slice, ComplexArray]],
    closest: IntArray,
    noise_mw: float,
) -> BeamPowerTable:
    """
    Build rho_b |h_b^H f_m|^2 and sqrt(rho_b) h_b^H f_m for every BS, beam and cell.

    Args:
        powers_mw: per-BS transmit power
        codebooks: per-BS codebooks, all with the same number of beams
        blocks: (cell slice, (B, cells, N) channels) pairs covering the grid
        closest: (G,) 0-based closest-BS index per cell
        noise_mw: effective noise power
    """
    num_bs = len(codebooks)
    if len(powers_mw) != num_bs:
        raise DimensionMismatchError("powers", num_bs, len(powers_mw))
    num_beams = codebooks[0].num_beams
    for codebook in codebooks:
        if codebook.num_beams != num_beams:
            raise DimensionMismatchError("codebook size", num_beams, codebook.num_beams)

    table = np.zeros((num_bs, num_beams, closest.size), dtype=np.float64)
    amplitudes = np.zeros(table.shape, dtype=np.complex128)
    for window, coeffs in blocks:
        if coeffs.shape[0] != num_bs:
            raise DimensionMismatchError("channel block", num_bs, coeffs.shape[0])
        for b in range(num_bs):
            proj = np.einsum("gn,nm->mg", coeffs[b].conj(), codebooks[b].matrix)
            table[b, :, window] = powers_mw[b] * (proj.real**2 + proj.imag**2)
            amplitudes[b, :, window] = math.sqrt(powers_mw[b]) * proj
    return BeamPowerTable(
        powers=table,
        closest=np.asarray(closest),
        noise_mw=noise_mw,
        amplitudes=amplitudes,
    )


def joint_closed_snr(
    power_sum: FloatArray, repetitions: FloatArray | float, noise_mw: float
) -> FloatArray:
    """Grid form of the closed-form joint SNR (linear)."""
    return repetitions * power_sum / noise_mw


def phase_row_snrs(
    amplitudes: ComplexArray, phase_book: PhaseBook, noise_mw: float
) -> FloatArray:
    """
    Per-row SNR for many locations.

    Args:
        amplitudes: (P, B) per-BS amplitudes sqrt(rho_b) h_b^H f_b
        phase_book: rows to apply

    Returns:
        (P, R) linear SNR of each phase row
    """
    _check_noise(noise_mw)
    if amplitudes.shape[1] != phase_book.width:
        raise DimensionMismatchError(
            "phase_book width", amplitudes.shape[1], phase_book.width
        )
    received = amplitudes @ phase_book.amplitudes().T
    return np.abs(received) ** 2 / noise_mw
