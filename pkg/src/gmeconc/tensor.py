"""Dense multi-index linear algebra for n-partite qudit systems.

Flat indices are row-major with party 1 most significant, so on three
qubits the label ``(u, v, w)`` sits at ``4u + 2v + w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence, Union

import numpy as np

from .errors import (
    DimensionError,
    DomainError,
    InvalidLabelError,
    InvalidSubsetError,
    NormalizationError,
    SymmetryError,
    UnitarityError,
)
from .partitions import as_bipartition

ATOL = 1e-10
PSD_SLACK = 1e-8


def check_dims(dims: Sequence[int], min_parties: int = 2) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if len(dims) < min_parties:
        raise DimensionError(f"need at least 2 parties, got dims={dims}")
    if any(d < 2 for d in dims):
        raise DimensionError(f"every local dimension must be >= 2, got {dims}")
    return dims


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state on ``prod(dims)`` amplitudes."""

    dims: tuple
    amp: np.ndarray

    def __post_init__(self):
        dims = check_dims(self.dims)
        amp = np.asarray(self.amp, dtype=complex).reshape(-1)
        if amp.size != prod(dims):
            raise DimensionError(f"{amp.size} amplitudes for dims {dims}")
        norm = float(np.vdot(amp, amp).real)
        if abs(norm - 1.0) > ATOL:
            raise NormalizationError(f"squared norm {norm!r} != 1")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amp", _frozen(amp))

    @classmethod
    def normalized(cls, dims, amp) -> "StateVector":
        amp = np.asarray(amp, dtype=complex).reshape(-1)
        return cls(dims, amp / np.linalg.norm(amp))

    @property
    def n(self) -> int:
        return len(self.dims)

    def tensor(self) -> np.ndarray:
        return self.amp.reshape(self.dims)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite ``D x D`` matrix.

    A single party is allowed so that one-site reductions stay typed.
    """

    dims: tuple
    mat: np.ndarray

    def __post_init__(self):
        dims = check_dims(self.dims, min_parties=1)
        D = prod(dims)
        mat = np.asarray(self.mat, dtype=complex)
        if mat.shape != (D, D):
            raise DimensionError(f"matrix shape {mat.shape} does not match dims {dims}")
        if np.max(np.abs(mat - mat.conj().T)) > ATOL:
            raise SymmetryError("density matrix is not Hermitian")
        tr = np.trace(mat).real
        if abs(tr - 1.0) > ATOL:
            raise NormalizationError(f"trace {tr!r} != 1")
        if np.linalg.eigvalsh(mat)[0] < -PSD_SLACK:
            raise DomainError("density matrix is not positive semidefinite")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "mat", _frozen(mat))

    @property
    def n(self) -> int:
        return len(self.dims)


State = Union[StateVector, DensityMatrix]


def flat_index(dims: Sequence[int], digits: Sequence[int]) -> int:
    """Row-major flat index of a basis label.

    >>> flat_index((2, 3, 2), (1, 2, 0))
    10
    """
    if len(digits) != len(dims):
        raise InvalidLabelError(f"label {tuple(digits)} has wrong length for dims {tuple(dims)}")
    idx = 0
    for d, k in zip(dims, digits):
        if not 0 <= k < d:
            raise InvalidLabelError(f"digit {k} out of range for local dimension {d}")
        idx = idx * d + int(k)
    return idx


def multi_index(dims: Sequence[int], index: int) -> tuple[int, ...]:
    D = prod(dims)
    if not 0 <= index < D:
        raise InvalidLabelError(f"flat index {index} outside [0, {D})")
    return tuple(int(k) for k in np.unravel_index(index, tuple(dims)))


def pure_to_density(psi: StateVector) -> DensityMatrix:
    return DensityMatrix(psi.dims, np.outer(psi.amp, psi.amp.conj()))


def as_density(state: State) -> DensityMatrix:
    if isinstance(state, StateVector):
        return pure_to_density(state)
    return state


def _reduce(mat: np.ndarray, dims: tuple, keep: list[int]) -> np.ndarray:
    n = len(dims)
    t = mat.reshape(dims + dims)
    drop = [k for k in range(n) if k not in keep]
    # bring kept row/col axes to the front, traced ones pairwise to the back
    perm = keep + [n + k for k in keep] + drop + [n + k for k in drop]
    dk = prod(dims[k] for k in keep)
    dd = prod(dims[k] for k in drop)
    t = t.transpose(perm).reshape(dk, dk, dd, dd)
    return np.trace(t, axis1=2, axis2=3)


def partial_trace(rho: State, keep) -> DensityMatrix:
    """Reduce onto the parties in ``keep`` (1-based), tracing out the rest."""
    rho = as_density(rho)
    n = rho.n
    keep_pos = sorted({int(p) - 1 for p in keep})
    if not keep_pos or len(keep_pos) == n:
        raise InvalidSubsetError("keep must be a nonempty proper subset of the parties")
    if keep_pos[0] < 0 or keep_pos[-1] >= n:
        raise InvalidSubsetError(f"parties {sorted(keep)} outside 1..{n}")
    red = _reduce(rho.mat, rho.dims, keep_pos)
    red = 0.5 * (red + red.conj().T)
    return DensityMatrix(tuple(rho.dims[k] for k in keep_pos), red)


def purity(rho: State) -> float:
    """``Tr(rho^2)``."""
    if isinstance(rho, StateVector):
        return 1.0
    m = rho.mat
    # Tr(m m) = sum_ij m_ij m_ji = sum |m_ij|^2 for Hermitian m
    return float(np.sum(np.abs(m) ** 2))


def schmidt_weights(psi: StateVector, parties) -> np.ndarray:
    """Squared Schmidt coefficients of ``psi`` across ``parties | rest``, ascending."""
    n = psi.n
    keep = sorted(int(p) - 1 for p in parties)
    drop = [k for k in range(n) if k not in keep]
    dk = prod(psi.dims[k] for k in keep)
    m = psi.tensor().transpose(keep + drop).reshape(dk, -1)
    lam = np.linalg.svd(m, compute_uv=False) ** 2
    return np.sort(lam / lam.sum())


def linear_entropy_pure(psi: StateVector, parties) -> float:
    """``1 - Tr(rho_A^2)`` of a pure state, as ``2 sum_{i<j} l_i l_j``.

    Summing products instead of subtracting the purity from 1 keeps
    product states at round-off level (~1e-32) rather than ~1e-16.
    """
    lam = schmidt_weights(psi, parties)
    below = np.concatenate(([0.0], np.cumsum(lam)[:-1]))
    return float(2.0 * np.dot(lam, below))


def partial_transpose(rho: State, gamma) -> np.ndarray:
    """Transpose the row/column indices of the parties on the A side of ``gamma``."""
    rho = as_density(rho)
    n = rho.n
    g = as_bipartition(gamma, n)
    t = rho.mat.reshape(rho.dims + rho.dims)
    axes = list(range(2 * n))
    for k in g.positions():
        axes[k], axes[n + k] = axes[n + k], axes[k]
    D = rho.mat.shape[0]
    return np.ascontiguousarray(t.transpose(axes)).reshape(D, D)


def min_eigenvalue_selfadjoint(m: np.ndarray) -> float:
    """Smallest eigenvalue of a Hermitian matrix (LAPACK ``heevd``)."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if np.max(np.abs(m - m.conj().T), initial=0.0) > 1e-8:
        raise SymmetryError("matrix is not Hermitian within 1e-8")
    return float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])


def check_unitary(u: np.ndarray, tol: float = ATOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {u.shape}")
    if np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) > tol:
        raise UnitarityError("factor is not unitary")
    return u


def local_operator(units: Sequence[np.ndarray]) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for u in units:
        out = np.kron(out, u)
    return out


def apply_local_unitaries(state: State, units: Sequence[np.ndarray]) -> State:
    """Apply ``U_1 (x) ... (x) U_n`` to a pure state or conjugate a density matrix by it."""
    if len(units) != state.n:
        raise DimensionError(f"{len(units)} local factors for {state.n} parties")
    units = [check_unitary(u) for u in units]
    for d, u in zip(state.dims, units):
        if u.shape[0] != d:
            raise DimensionError(f"factor of size {u.shape[0]} on a party of dimension {d}")
    if isinstance(state, StateVector):
        t = state.tensor()
        for k, u in enumerate(units):
            t = np.moveaxis(np.tensordot(u, t, axes=([1], [k])), 0, k)
        return StateVector(state.dims, t.reshape(-1))
    U = local_operator(units)
    m = U @ state.mat @ U.conj().T
    return DensityMatrix(state.dims, 0.5 * (m + m.conj().T))


def mix(weights: Sequence[float], states: Sequence[State]) -> DensityMatrix:
    mats = [as_density(s).mat for s in states]
    dims = states[0].dims
    return DensityMatrix(dims, sum(w * m for w, m in zip(weights, mats)))


def maximally_mixed(dims: Sequence[int]) -> DensityMatrix:
    dims = check_dims(dims)
    D = prod(dims)
    return DensityMatrix(dims, np.eye(D) / D)
