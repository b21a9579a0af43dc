"""Positive-partial-transpose classification across every bipartition."""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from .partitions import Bipartition, enumerate_bipartitions
from .tensor import State, as_density, min_eigenvalue_selfadjoint, partial_transpose

PPT_SLACK = 1e-9


@dataclass(frozen=True)
class PptReport:
    per_bipartition: Mapping[Bipartition, float]
    ppt_all: bool

    def npt_cuts(self) -> list[Bipartition]:
        return [g for g, v in self.per_bipartition.items() if v < -PPT_SLACK]


def ppt_classify(rho: State) -> PptReport:
    """Minimum eigenvalue of the partial transpose for each cut.

    States within ``PPT_SLACK`` of the boundary count as PPT.
    """
    rho = as_density(rho)
    mins = {g: min_eigenvalue_selfadjoint(partial_transpose(rho, g)) for g in enumerate_bipartitions(rho.n)}
    return PptReport(MappingProxyType(mins), all(v >= -PPT_SLACK for v in mins.values()))
