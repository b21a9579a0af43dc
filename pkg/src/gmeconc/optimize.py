"""Derivative-free maximization: golden-section line search inside cyclic
coordinate sweeps over periodic parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI2 = (3 - math.sqrt(5)) / 2
TWO_PI = 2 * math.pi


def golden_section_max(f, a: float, b: float, tol: float = 1e-7, max_evals: int | None = None):
    """Maximize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x), evals)``.

    ``max_evals`` (at least 2) truncates the search early.
    """
    h = b - a
    if h <= tol:
        x = 0.5 * (a + b)
        return x, f(x), 1
    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    if max_evals is not None:
        steps = max(1, min(steps, max_evals - 1))
    c, d = a + INV_PHI2 * h, a + INV_PHI * h
    yc, yd = f(c), f(d)
    evals = 2
    for _ in range(steps - 1):
        if yc > yd:
            b, d, yd = d, c, yc
            h *= INV_PHI
            c = a + INV_PHI2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            h *= INV_PHI
            d = a + INV_PHI * h
            yd = f(d)
        evals += 1
    return (c, yc, evals) if yc > yd else (d, yd, evals)


@dataclass
class SearchResult:
    x: np.ndarray
    value: float
    evaluations: int
    converged: bool
    sweeps: int


def coordinate_search(
    f: Callable[[np.ndarray], float],
    x0: np.ndarray,
    *,
    max_evals: int = 2000,
    tol: float = 1e-10,
    grid: int = 8,
    line_tol: float = 1e-7,
    flat_tol: float = 1e-14,
) -> SearchResult:
    """Maximize ``f`` over 2*pi-periodic coordinates.

    Each sweep visits every coordinate once. A coordinate is first probed on
    a coarse ``grid`` around its current value (the whole period on the first
    sweep, then a window scaled to the previous move); the best probe is
    refined by golden section on the bracket around it. Coordinates whose
    probes are flat to ``flat_tol`` are skipped in later sweeps. Stops when a
    sweep gains less than ``tol`` or the evaluation budget runs out.
    """
    x = np.array(x0, dtype=float)
    best = f(x)
    evals = 1
    n = x.size
    width = np.full(n, TWO_PI)
    dead = np.zeros(n, dtype=bool)
    sweeps = 0
    converged = False

    exhausted = False
    while not exhausted and evals < max_evals:
        sweeps += 1
        start = best
        for j in range(n):
            if dead[j]:
                continue
            if evals >= max_evals:
                exhausted = True
                break
            x_j = x[j]
            w = width[j]
            offsets = (np.arange(grid) - grid // 2) * (w / grid)
            offsets = offsets[offsets != 0.0]
            if max_evals - evals < len(offsets) + 2:
                exhausted = True
                break
            vals = []
            for off in offsets:
                x[j] = x_j + off
                vals.append(f(x))
            evals += len(offsets)
            vals = np.array(vals)
            if sweeps == 1 and np.ptp(np.append(vals, best)) < flat_tol:
                dead[j] = True
                x[j] = x_j
                continue
            k = int(np.argmax(vals))
            centre, centre_val = (x_j, best) if best >= vals[k] else (x_j + offsets[k], vals[k])
            step = w / grid

            def line(t, j=j):
                x[j] = t
                return f(x)

            t, val, used = golden_section_max(
                line, centre - step, centre + step, tol=line_tol, max_evals=max_evals - evals
            )
            evals += used
            if val > centre_val:
                x[j], new = t, val
            else:
                x[j], new = centre, centre_val
            moved = abs(x[j] - x_j)
            width[j] = min(TWO_PI, max(8 * moved, 64 * line_tol) * 2)
            best = max(best, new)
        if not exhausted and best - start < tol:
            converged = True
            break

    x = np.mod(x, TWO_PI)
    return SearchResult(x, float(best), evals, converged, sweeps)
