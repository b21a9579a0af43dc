"""Named states, the noisy families used in the figures, and random test states.

Qudit GHZ states use levels 0 and 1 on every party (not 0 and d-1) so they
line up with the default witness labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, NormalizationError, UnsupportedError
from .partitions import enumerate_bipartitions
from .tensor import (
    DensityMatrix,
    StateVector,
    check_dims,
    flat_index,
    maximally_mixed,
    mix,
)
from .unitary import frame_unitaries

FAMILY_KINDS = ("ghz", "w", "gghz", "ghz_w_noise", "ghz_noise", "product", "custom-file")


def _basis(dims, digits) -> np.ndarray:
    v = np.zeros(prod(dims), dtype=complex)
    v[flat_index(dims, digits)] = 1.0
    return v


def make_ghz(n: int, d: int = 2) -> StateVector:
    dims = check_dims([d] * n)
    amp = (_basis(dims, [0] * n) + _basis(dims, [1] * n)) / np.sqrt(2)
    return StateVector(dims, amp)


def make_w(n: int) -> StateVector:
    dims = check_dims([2] * n)
    amp = sum(_basis(dims, [1 if j == k else 0 for j in range(n)]) for k in range(n))
    return StateVector(dims, amp / np.sqrt(n))


def make_product(dims: Sequence[int], digits: Optional[Sequence[int]] = None) -> StateVector:
    dims = check_dims(dims)
    return StateVector(dims, _basis(dims, digits or [0] * len(dims)))


def make_gghz(dims: Sequence[int], alpha: complex, beta: complex, frames=None) -> StateVector:
    """``alpha |0'>^n + beta |1'>^n`` with ``|0'>, |1'>`` the first two
    columns of each party's frame unitary."""
    dims = check_dims(dims)
    if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-10:
        raise NormalizationError("|alpha|^2 + |beta|^2 must equal 1")
    if frames is None:
        frames = [np.zeros(d * d) for d in dims]
    units = frame_unitaries(dims, frames)
    zero = one = np.ones(1, dtype=complex)
    for u in units:
        zero = np.kron(zero, u[:, 0])
        one = np.kron(one, u[:, 1])
    return StateVector.normalized(dims, alpha * zero + beta * one)


def make_ghz_w_mix(c1: float, c2: float) -> DensityMatrix:
    """``c1 GHZ + c2 W + (1 - c1 - c2) 1/8`` on three qubits."""
    if c1 < 0 or c2 < 0 or c1 + c2 > 1 + 1e-12:
        raise DomainError(f"(c1, c2) = ({c1}, {c2}) outside the simplex")
    rest = max(0.0, 1.0 - c1 - c2)
    return mix([c1, c2, rest], [make_ghz(3), make_w(3), maximally_mixed((2, 2, 2))])


def white_noise(state, p: float) -> DensityMatrix:
    """``p rho + (1 - p) 1/D``."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"visibility {p} outside [0, 1]")
    return mix([p, 1.0 - p], [state, maximally_mixed(state.dims)])


def random_pure(dims: Sequence[int], seed) -> StateVector:
    dims = check_dims(dims)
    rng = np.random.default_rng(seed)
    D = prod(dims)
    return StateVector.normalized(dims, rng.normal(size=D) + 1j * rng.normal(size=D))


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_product_across(dims: Sequence[int], subset, rng: np.random.Generator) -> StateVector:
    """Random pure state factoring as ``psi_A (x) psi_B`` across ``subset | rest``."""
    dims = check_dims(dims)
    n = len(dims)
    a_pos = sorted(p - 1 for p in subset)
    b_pos = [k for k in range(n) if k not in a_pos]
    da = prod(dims[k] for k in a_pos)
    db = prod(dims[k] for k in b_pos)
    psi_a = rng.normal(size=da) + 1j * rng.normal(size=da)
    psi_b = rng.normal(size=db) + 1j * rng.normal(size=db)
    t = np.kron(psi_a, psi_b).reshape([dims[k] for k in a_pos + b_pos])
    t = t.transpose(np.argsort(a_pos + b_pos))
    return StateVector.normalized(dims, t.reshape(-1))


def random_biseparable(dims: Sequence[int], seed) -> DensityMatrix:
    """Mixture of 2 to 8 random pure states, each a product across a random cut."""
    dims = check_dims(dims)
    rng = np.random.default_rng(seed)
    cuts = enumerate_bipartitions(len(dims))
    k = int(rng.integers(2, 9))
    weights = rng.dirichlet(np.ones(k))
    comps = [random_product_across(dims, cuts[rng.integers(len(cuts))].subset, rng) for _ in range(k)]
    return mix(weights, comps)


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of a state, as embedded in config files.

    ``params`` holds ``alpha``/``beta`` (gghz), ``c1``/``c2`` (ghz_w_noise),
    ``p`` (ghz_noise) or ``path`` (custom-file). Complex values may be given
    as ``[re, im]`` pairs.
    """

    kind: str
    dims: tuple = (2, 2, 2)
    params: dict = field(default_factory=dict)
    frames: Optional[tuple] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise UnsupportedError(f"unknown family {self.kind!r}; choose from {FAMILY_KINDS}")
        required = {"gghz": ("alpha", "beta"), "ghz_w_noise": ("c1", "c2"),
                    "ghz_noise": ("p",), "custom-file": ("path",)}.get(self.kind, ())
        missing = [k for k in required if k not in self.params]
        if missing:
            raise DomainError(f"family {self.kind!r} needs params {missing}")
        if self.kind != "custom-file":
            object.__setattr__(self, "dims", check_dims(self.dims))


def as_complex(v) -> complex:
    if isinstance(v, (list, tuple)):
        return complex(v[0], v[1])
    return complex(v)


def build_family(spec: FamilySpec):
    """Materialize a :class:`FamilySpec` into a state."""
    dims, params = spec.dims, spec.params
    n = len(dims)
    if spec.kind == "ghz":
        if len(set(dims)) != 1:
            raise UnsupportedError("ghz needs equal local dimensions")
        return make_ghz(n, dims[0])
    if spec.kind == "w":
        if any(d != 2 for d in dims):
            raise UnsupportedError("w is defined for qubits only")
        return make_w(n)
    if spec.kind == "product":
        return make_product(dims)
    if spec.kind == "gghz":
        frames = spec.frames
        if frames is None and spec.seed is not None:
            rng = np.random.default_rng(spec.seed)
            frames = [rng.uniform(0, 2 * np.pi, d * d) for d in dims]
        return make_gghz(dims, as_complex(params["alpha"]), as_complex(params["beta"]), frames)
    if spec.kind == "ghz_w_noise":
        return make_ghz_w_mix(float(params["c1"]), float(params["c2"]))
    if spec.kind == "ghz_noise":
        return white_noise(make_ghz(n, dims[0]), float(params["p"]))
    from .io import load_state

    return load_state(params["path"])

