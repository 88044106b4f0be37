"""
Codebook and phase book generators.

dft_codebook builds the per-BS DFT beam set; make_phase_book builds the
orthogonal phase rows broadcast as repetitions of one joint beam, and
column_phase_book spreads a smaller book over more BSs.
"""

import math
from collections.abc import Sequence

import numpy as np
from scipy.linalg import hadamard

from ..exceptions import InvalidValueError
from ..value_objects import BeamCodebook, PhaseBook

HADAMARD_ORDERS = (1, 2, 4)


def dft_codebook(n: int) -> BeamCodebook:
    """
    N-point DFT codebook: beam m, entry k = e^{i 2 pi k m / n} / sqrt(n).

    Raises:
        InvalidValueError: If n < 1
    """
    if n < 1:
        raise InvalidValueError("n", "codebook size must be >= 1")
    k = np.arange(n)
    matrix = np.exp(2j * np.pi * np.outer(k, k) / n) / math.sqrt(n)
    return BeamCodebook(matrix)


def make_phase_book(b: int) -> PhaseBook:
    """
    Orthogonal phase book of order ``b``, rows in lexicographic order.

    Orders 1, 2 and 4 use the Sylvester Hadamard sign pattern (pi where the
    entry is -1); any other order uses DFT rows 2 pi r j / b mod 2 pi.

    Raises:
        InvalidValueError: If b < 1
    """
    if b < 1:
        raise InvalidValueError("b", "phase book order must be >= 1")
    if b in HADAMARD_ORDERS:
        signs = hadamard(b)
        rows = [tuple(math.pi if s < 0 else 0.0 for s in row) for row in signs]
    else:
        rows = [
            tuple(math.fmod(2.0 * math.pi * r * j / b, 2.0 * math.pi) for j in range(b))
            for r in range(b)
        ]
    return PhaseBook(tuple(sorted(rows)))


def column_phase_book(order: int, columns: Sequence[int]) -> PhaseBook:
    """
    Reduced phase book: ``order`` rows, BS j on column ``columns[j]`` of the
    order-``order`` book.

    BSs on distinct columns have their cross terms cancelled; BSs sharing a
    column add up coherently in every row. Each row is rotated so that its
    first phase is 0, which leaves every per-row SNR unchanged.

    Raises:
        InvalidValueError: If a column lies outside [0..order-1] or none is given
    """
    if not columns:
        raise InvalidValueError("columns", "needs at least one BS")
    if any(not 0 <= c < order for c in columns):
        raise InvalidValueError("columns", f"must lie in [0..{order - 1}]")
    base = make_phase_book(order)
    two_pi = 2.0 * math.pi
    rows = []
    for row in base.rows:
        picked = [row[c] for c in columns]
        if picked[0] != 0.0:
            picked = [math.fmod(theta - picked[0] + two_pi, two_pi) for theta in picked]
        rows.append(tuple(picked))
    return PhaseBook(tuple(rows))
