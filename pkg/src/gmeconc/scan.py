"""Grid scan of the bound over the GHZ / W / white-noise simplex."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .errors import DomainError
from .ppt import ppt_classify
from .states import make_ghz_w_mix
from .witness import OptimizerConfig, maximize_bound

HEADER = ("c1", "c2", "bound", "ppt_all")


@dataclass(frozen=True)
class ScanSpec:
    h: float = 0.02
    optimizer: OptimizerConfig = OptimizerConfig()
    output: Optional[str] = None
    workers: int = 1
    warm_start: bool = True

    def __post_init__(self):
        if not 0 < self.h <= 0.25:
            raise DomainError(f"grid step h={self.h} outside (0, 0.25]")
        if self.workers < 1:
            raise DomainError("workers must be >= 1")

    @property
    def steps(self) -> int:
        return int(np.floor(1.0 / self.h + 1e-9))

    @property
    def decimals(self) -> int:
        dec = 2
        while abs(round(self.h, dec) - self.h) > 1e-12 and dec < 12:
            dec += 1
        return dec


def point_seed(seed: int, i: int, j: int) -> int:
    return int(np.random.SeedSequence([seed, i, j]).generate_state(1, dtype=np.uint64)[0])


def _row(args):
    spec, i = args
    c1 = i * spec.h
    out, warm = [], None
    for j in range(spec.steps - i + 1):
        c2 = j * spec.h
        rho = make_ghz_w_mix(c1, min(c2, 1.0 - c1))
        cfg = replace(spec.optimizer, seed=point_seed(spec.optimizer.seed, i, j))
        res = maximize_bound(rho, cfg, warm_start=warm)
        if spec.warm_start:
            warm = res.witness
        out.append((c1, c2, res.lower_bound, ppt_classify(rho).ppt_all))
    return out


def scan_rows(spec: ScanSpec) -> list[tuple]:
    """Rows ``(c1, c2, bound, ppt_all)`` in lexicographic grid order.

    Each fixed-``c1`` column of the grid is one task, warm-started along
    ``c2``; per-point seeds depend only on ``(seed, i, j)``, so the result
    does not depend on the number of workers.
    """
    tasks = [(spec, i) for i in range(spec.steps + 1)]
    if spec.workers == 1:
        chunks = map(_row, tasks)
    else:
        with ProcessPoolExecutor(spec.workers) as pool:
            chunks = list(pool.map(_row, tasks))
    return [row for chunk in chunks for row in chunk]


def format_csv(rows, decimals: int = 2) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for c1, c2, bound, ppt_all in rows:
        w.writerow([f"{c1:.{decimals}f}", f"{c2:.{decimals}f}", f"{bound:.6f}", int(ppt_all)])
    return buf.getvalue()
