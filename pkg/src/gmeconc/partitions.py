"""Bipartitions of n parties and the label swap they induce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ArityError, DimensionError, InvalidSubsetError


@dataclass(frozen=True, order=True)
class Bipartition:
    """A cut ``A | B`` of parties ``1..n``, stored by its A side.

    The A side is canonicalized to contain party 1, so ``{2,3 | 1}`` and
    ``{1 | 2,3}`` compare equal. Construct with any nonempty proper subset.
    """

    n: int
    subset: frozenset

    def __post_init__(self):
        if self.n < 2:
            raise ArityError(f"need at least 2 parties, got n={self.n}")
        parties = frozenset(int(p) for p in self.subset)
        full = frozenset(range(1, self.n + 1))
        if not parties <= full:
            raise InvalidSubsetError(f"parties {sorted(parties - full)} outside 1..{self.n}")
        if not parties or parties == full:
            raise InvalidSubsetError("bipartition side must be a nonempty proper subset")
        if 1 not in parties:
            parties = full - parties
        object.__setattr__(self, "subset", parties)

    @property
    def complement(self) -> frozenset:
        return frozenset(range(1, self.n + 1)) - self.subset

    @property
    def mask(self) -> int:
        # party k occupies bit k-1
        return sum(1 << (p - 1) for p in self.subset)

    def positions(self) -> list[int]:
        """Zero-based positions of the A side, ascending."""
        return sorted(p - 1 for p in self.subset)

    def __str__(self):
        a = ",".join(map(str, sorted(self.subset)))
        b = ",".join(map(str, sorted(self.complement)))
        return f"{{{a}|{b}}}"


def as_bipartition(gamma, n: int) -> Bipartition:
    if isinstance(gamma, Bipartition):
        if gamma.n != n:
            raise DimensionError(f"bipartition is for n={gamma.n}, system has n={n}")
        return gamma
    return Bipartition(n, frozenset(gamma))


def parse_bipartition(text: str, n: int) -> Bipartition:
    """Parse the CLI syntax ``"1,3"`` (1-based parties on one side)."""
    try:
        parties = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise InvalidSubsetError(f"cannot parse bipartition {text!r}") from exc
    return Bipartition(n, frozenset(parties))


def enumerate_bipartitions(n: int) -> list[Bipartition]:
    """All ``2**(n-1) - 1`` canonical bipartitions, by ascending bitmask."""
    if n < 2:
        raise ArityError(f"need at least 2 parties, got n={n}")
    out = []
    # canonical sides always include party 1 (bit 0)
    for mask in range(1, 1 << n, 2):
        if mask == (1 << n) - 1:
            continue
        out.append(Bipartition(n, frozenset(k + 1 for k in range(n) if mask >> k & 1)))
    return out


def swap_label(x: Sequence[int], y: Sequence[int], gamma) -> tuple[tuple, tuple]:
    """Exchange the digits of ``x`` and ``y`` on the A side of ``gamma``.

    Returns ``(alpha, beta)`` where ``alpha`` is ``x`` carrying ``y``'s digits
    on the parties in ``gamma`` and ``beta`` is the mirror image.

    >>> swap_label((0, 0, 0), (1, 1, 1), {1})
    ((1, 0, 0), (0, 1, 1))
    """
    if len(x) != len(y):
        raise DimensionError(f"label lengths differ: {len(x)} vs {len(y)}")
    g = as_bipartition(gamma, len(x))
    alpha = tuple(y[k] if k + 1 in g.subset else x[k] for k in range(len(x)))
    beta = tuple(x[k] if k + 1 in g.subset else y[k] for k in range(len(x)))
    return alpha, beta


def swap_masks(n: int) -> list[tuple[int, int]]:
    """``(alpha, beta)`` bit patterns per canonical bipartition.

    Bit ``k`` set means party ``k + 1`` takes its digit from ``y``.
    """
    full = (1 << n) - 1
    return [(g.mask, full ^ g.mask) for g in enumerate_bipartitions(n)]

