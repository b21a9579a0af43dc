"""Biseparability witness bound and its optimization over local frames.

For a product two-copy vector with components labelled ``x`` and ``y`` in
rotated local frames, the witness value is

    I = |<x~|rho|y~>| - sum_gamma sqrt(<a~|rho|a~> <b~|rho|b~>)

where ``(a, b)`` is ``(x, y)`` with the digits of the parties in ``gamma``
exchanged. ``2 I`` lower-bounds the gme-concurrence of ``rho`` for every
witness, and ``I <= 0`` on all biseparable states.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DomainError, UnsupportedWitnessError
from .measure import check_witness_labels
from .optimize import coordinate_search
from .partitions import enumerate_bipartitions, swap_label
from .tensor import DensityMatrix, State, apply_local_unitaries, as_density, flat_index
from .unitary import frame_unitaries, split_params, unitary_from_params

DETECTION_EPS = 1e-9


@dataclass(frozen=True)
class WitnessVector:
    x: tuple
    y: tuple
    frame: tuple = ()

    def __post_init__(self):
        check_witness_labels(self.x, self.y)
        object.__setattr__(self, "x", tuple(int(k) for k in self.x))
        object.__setattr__(self, "y", tuple(int(k) for k in self.y))
        object.__setattr__(self, "frame", tuple(np.asarray(a, dtype=float) for a in self.frame))

    @classmethod
    def canonical(cls, dims: Sequence[int], frame=None) -> "WitnessVector":
        """Levels 0 and 1 on every party; identity frame unless given."""
        n = len(dims)
        if frame is None:
            frame = [np.zeros(d * d) for d in dims]
        return cls((0,) * n, (1,) * n, tuple(frame))

    def check(self, dims: Sequence[int]) -> None:
        if len(self.x) != len(dims):
            raise UnsupportedWitnessError(f"witness has {len(self.x)} parties, state has {len(dims)}")
        for k, d in enumerate(dims):
            if not (0 <= self.x[k] < d and 0 <= self.y[k] < d):
                raise UnsupportedWitnessError(f"witness level out of range on party {k + 1}")
        if len(self.frame) != len(dims):
            raise UnsupportedWitnessError("frame needs one angle vector per party")
        for k, (d, a) in enumerate(zip(dims, self.frame)):
            if a.size != d * d:
                raise UnsupportedWitnessError(f"party {k + 1} frame needs {d * d} angles, got {a.size}")

    def to_dict(self) -> dict:
        return {"x": list(self.x), "y": list(self.y), "frame": [a.tolist() for a in self.frame]}


@dataclass(frozen=True)
class BoundResult:
    raw_2I: float
    lower_bound: float
    witness: WitnessVector
    evaluations: int
    converged: bool

    @property
    def detected(self) -> bool:
        return self.raw_2I > DETECTION_EPS


@dataclass(frozen=True)
class OptimizerConfig:
    """Multi-start coordinate search settings.

    ``max_iters`` caps objective evaluations per restart; ``tol`` is the
    minimum gain of a full sweep before a restart counts as converged.
    """

    restarts: int = 20
    max_iters: int = 2000
    seed: int = 0
    tol: float = 1e-10

    def __post_init__(self):
        if self.restarts < 1:
            raise DomainError("restarts must be >= 1")
        if self.max_iters < 1:
            raise DomainError("max_iters must be >= 1")
        if not self.tol > 0:
            raise DomainError("tol must be positive")


def bound_I(rho: State, w: WitnessVector) -> float:
    """Witness value ``I[rho, w]``; the two-copy swap operator is never built."""
    rho = as_density(rho)
    w.check(rho.dims)
    units = frame_unitaries(rho.dims, w.frame)
    rotated = apply_local_unitaries(rho, [u.conj().T for u in units]).mat

    def el(a, b):
        return rotated[flat_index(rho.dims, a), flat_index(rho.dims, b)]

    value = abs(el(w.x, w.y))
    for g in enumerate_bipartitions(rho.n):
        a, b = swap_label(w.x, w.y, g)
        value -= math.sqrt(max(el(a, a).real, 0.0) * max(el(b, b).real, 0.0))
    return float(value)


class _Objective:
    """Fast evaluation of ``I`` for fixed ``rho`` and labels, varying frames.

    Only the ``2**n`` product vectors built from the rotated ``x``/``y``
    columns of each local unitary are needed.
    """

    def __init__(self, rho: DensityMatrix, x, y):
        self.mat = np.asarray(rho.mat)
        self.dims = rho.dims
        self.x, self.y = x, y
        n = rho.n
        # column s of V: bit (n-1-k) of s set means party k+1 uses its y column
        def col(sel):
            return sum(bit << (n - 1 - k) for k, bit in enumerate(sel))

        self.pairs = []
        for g in enumerate_bipartitions(n):
            sel = [1 if k + 1 in g.subset else 0 for k in range(n)]
            self.pairs.append((col(sel), col([1 - s for s in sel])))
        self.a_idx = np.array([p[0] for p in self.pairs])
        self.b_idx = np.array([p[1] for p in self.pairs])
        self.last = (1 << n) - 1

        self.offsets = np.cumsum([0] + [d * d for d in self.dims])
        self._params = [None] * n
        self._cols = [None] * n

    def _columns(self, k: int, angles: np.ndarray) -> np.ndarray:
        # coordinate sweeps change one party at a time; reuse the others
        if self._params[k] is None or not np.array_equal(self._params[k], angles):
            u = unitary_from_params(self.dims[k], angles)
            self._params[k] = angles.copy()
            self._cols[k] = u[:, [self.x[k], self.y[k]]]
        return self._cols[k]

    def __call__(self, flat: np.ndarray) -> float:
        v = None
        for k in range(len(self.dims)):
            cols = self._columns(k, flat[self.offsets[k]:self.offsets[k + 1]])
            if v is None:
                v = cols
            else:
                v = (v[:, None, :, None] * cols[None, :, None, :]).reshape(
                    v.shape[0] * cols.shape[0], -1
                )
        rv = self.mat @ v
        diag = np.einsum("is,is->s", v.conj(), rv).real
        np.maximum(diag, 0.0, out=diag)
        off = abs(np.vdot(v[:, 0], rv[:, self.last]))
        return float(off - np.sqrt(diag[self.a_idx] * diag[self.b_idx]).sum())


def _level_pairs(d: int) -> list[tuple[int, int]]:
    return list(combinations(range(d), 2))


def maximize_bound(
    rho: State,
    cfg: Optional[OptimizerConfig] = None,
    warm_start: Optional[WitnessVector] = None,
) -> BoundResult:
    """Maximize ``2 I`` over local frames with multi-start coordinate search.

    Restart 0 starts from ``warm_start`` (or the identity frame with levels
    0/1); later restarts draw random frames from seeds spawned off
    ``cfg.seed``. On qudit parties the starting level pair cycles through
    all pairs. The best restart wins; ties go to the lowest restart index.
    """
    cfg = cfg or OptimizerConfig()
    rho = as_density(rho)
    dims = rho.dims
    n_par = sum(d * d for d in dims)
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)

    best = None
    total = 0
    for r in range(cfg.restarts):
        rng = np.random.default_rng(seeds[r])
        if r == 0 and warm_start is not None:
            warm_start.check(dims)
            x, y = warm_start.x, warm_start.y
            x0 = np.concatenate(warm_start.frame)
        else:
            pairs = [_level_pairs(d)[r % len(_level_pairs(d))] for d in dims]
            x = tuple(p[0] for p in pairs)
            y = tuple(p[1] for p in pairs)
            x0 = np.zeros(n_par) if r == 0 else rng.uniform(0.0, 2 * np.pi, n_par)
        res = coordinate_search(_Objective(rho, x, y), x0, max_evals=cfg.max_iters, tol=cfg.tol)
        total += res.evaluations
        if best is None or res.value > best[0].value:
            best = (res, x, y)

    res, x, y = best
    w = WitnessVector(x, y, tuple(split_params(dims, res.x)))
    raw = 2.0 * res.value
    return BoundResult(raw, max(raw, 0.0), w, total, res.converged)


@dataclass(frozen=True)
class ThresholdResult:
    """Outcome of a visibility bisection.

    ``outcome`` is ``"threshold"``, ``"never positive"`` or
    ``"always positive"``; ``p_star`` is only set for ``"threshold"``.
    """

    outcome: str
    p_star: Optional[float] = None
    steps: int = 0
    history: tuple = field(default=(), repr=False)

    @property
    def resistance(self) -> Optional[float]:
        return None if self.p_star is None else 1.0 - self.p_star


def noise_threshold(
    family: Callable[[float], State],
    cfg: Optional[OptimizerConfig] = None,
    tol: float = 1e-3,
) -> ThresholdResult:
    """Bisect the visibility ``p`` in ``[0, 1]`` at which the bound switches on.

    The family is assumed to become more detectable as ``p`` grows. Each
    midpoint is re-optimized starting from the previous optimum.
    """
    cfg = cfg or OptimizerConfig()
    history = []

    def probe(p, warm):
        res = maximize_bound(family(p), cfg, warm_start=warm)
        history.append((p, res.raw_2I))
        return res

    hi = probe(1.0, None)
    if not hi.detected:
        return ThresholdResult("never positive", steps=1, history=tuple(history))
    lo = probe(0.0, None)
    if lo.detected:
        return ThresholdResult("always positive", steps=2, history=tuple(history))

    a, b = 0.0, 1.0
    warm = hi.witness
    while b - a > tol:
        mid = 0.5 * (a + b)
        res = probe(mid, warm)
        if res.detected:
            b, warm = mid, res.witness
        else:
            a = mid
    return ThresholdResult("threshold", 0.5 * (a + b), len(history), tuple(history))
