"""Pure-state concurrences and the algebraic pure-state bound."""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import NormalizationError, UnsupportedWitnessError
from .partitions import Bipartition, as_bipartition, enumerate_bipartitions, swap_label
from .tensor import StateVector, flat_index, linear_entropy_pure


@dataclass(frozen=True)
class PureMeasureReport:
    per_bipartition: Mapping[Bipartition, float]
    gme_value: float
    minimizing_bipartition: Bipartition


def concurrence_bipartition(psi: StateVector, gamma) -> float:
    """``sqrt(2 (1 - Tr rho_A^2))`` for the A side of ``gamma``."""
    g = as_bipartition(gamma, psi.n)
    return sqrt(2.0 * linear_entropy_pure(psi, g.subset))


def gme_concurrence_pure(psi: StateVector) -> PureMeasureReport:
    """Minimum bipartition concurrence over every cut of ``psi``.

    Ties resolve to the first cut in enumeration order.
    """
    values = {g: concurrence_bipartition(psi, g) for g in enumerate_bipartitions(psi.n)}
    best = min(values, key=values.__getitem__)
    return PureMeasureReport(MappingProxyType(values), values[best], best)


def check_witness_labels(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise UnsupportedWitnessError("witness labels have different lengths")
    clash = [k + 1 for k in range(len(x)) if x[k] == y[k]]
    if clash:
        raise UnsupportedWitnessError(f"witness labels coincide on parties {clash}")


def pure_bound_B(psi: StateVector, x: Sequence[int], y: Sequence[int]) -> float:
    """``2|c_x c_y| - 2 sum_gamma |c_alpha c_beta|`` read off the amplitudes.

    Lower-bounds the gme-concurrence of ``psi``; may be negative.
    """
    check_witness_labels(x, y)
    c = psi.amp

    def amp(label):
        return c[flat_index(psi.dims, label)]

    total = 2.0 * abs(amp(x) * amp(y))
    for g in enumerate_bipartitions(psi.n):
        a, b = swap_label(x, y, g)
        total -= 2.0 * abs(amp(a) * amp(b))
    return float(total)


def gghz_concurrence(alpha: complex, beta: complex) -> float:
    """Exact gme-concurrence ``2|alpha beta|`` of a generalized GHZ state."""
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-10:
        raise NormalizationError("|alpha|^2 + |beta|^2 must equal 1")
    return 2.0 * abs(complex(alpha) * complex(beta))
