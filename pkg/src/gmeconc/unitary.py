"""Composite parametrization of the unitary group U(d).

A ``d x d`` table of angles ``lam`` defines

    U = [prod_{m<n} exp(i P_n lam[n, m]) exp(i Y_mn lam[m, n])] * prod_l exp(i P_l lam[l, l])

with ``P_l = |l><l|`` and ``Y_mn = -i|m><n| + i|n><m|``. The products run
over ``m = 0..d-2`` (outer) and ``n = m+1..d-1`` (inner), left to right.
Entries above the diagonal are mixing angles, the rest are phases. With
mixing angles in ``[0, pi/2]`` and phases in ``[0, 2 pi)`` every unitary is
reached, and all-zero angles give the identity.
"""

from __future__ import annotations

import cmath
import math
from typing import Sequence

import numpy as np

from .errors import ArityError


def unitary_from_params(d: int, angles: Sequence[float]) -> np.ndarray:
    lam = np.asarray(angles, dtype=float)
    if lam.size != d * d:
        raise ArityError(f"U({d}) needs {d * d} angles, got {lam.size}")
    if d == 2:
        return _qubit_unitary(*lam)
    lam = lam.reshape(d, d)
    u = np.eye(d, dtype=complex)
    for m in range(d - 1):
        for n in range(m + 1, d):
            # right-multiplying by exp(i P_n phi) rescales column n
            u[:, n] *= np.exp(1j * lam[n, m])
            c, s = np.cos(lam[m, n]), np.sin(lam[m, n])
            col_m = u[:, m].copy()
            u[:, m] = c * col_m - s * u[:, n]
            u[:, n] = s * col_m + c * u[:, n]
    u *= np.exp(1j * np.diag(lam))[None, :]
    return u


def _qubit_unitary(p0: float, theta: float, phi: float, p1: float) -> np.ndarray:
    # closed form of the general loop for d = 2
    c, s = math.cos(theta), math.sin(theta)
    e0, e1, ep = cmath.exp(1j * p0), cmath.exp(1j * p1), cmath.exp(1j * phi)
    return np.array([[c * e0, s * e1], [-s * ep * e0, c * ep * e1]])


def frame_unitaries(dims: Sequence[int], frame: Sequence[Sequence[float]]) -> list[np.ndarray]:
    """One unitary per party from per-party angle vectors."""
    if len(frame) != len(dims):
        raise ArityError(f"{len(frame)} frame entries for {len(dims)} parties")
    return [unitary_from_params(d, a) for d, a in zip(dims, frame)]


def split_params(dims: Sequence[int], flat: np.ndarray) -> list[np.ndarray]:
    out, start = [], 0
    for d in dims:
        out.append(np.asarray(flat[start:start + d * d], dtype=float))
        start += d * d
    if start != len(flat):
        raise ArityError(f"expected {start} frame angles, got {len(flat)}")
    return out
