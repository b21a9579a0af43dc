import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gmeconc.errors import (
    DimensionError,
    InvalidLabelError,
    InvalidSubsetError,
    NormalizationError,
    SymmetryError,
    UnitarityError,
)
from gmeconc.states import make_ghz, make_product, make_w, random_pure
from gmeconc.tensor import (
    DensityMatrix,
    StateVector,
    apply_local_unitaries,
    flat_index,
    maximally_mixed,
    min_eigenvalue_selfadjoint,
    multi_index,
    partial_trace,
    partial_transpose,
    pure_to_density,
    linear_entropy_pure,
    purity,
)
from oracles import (
    charpoly,
    jacobi_eigenvalues,
    labels,
    partial_trace_loops,
    poly_from_roots,
    random_density,
    random_local_unitaries,
)

BELL = StateVector((2, 2), np.array([1, 0, 0, 1]) / np.sqrt(2))
X = np.array([[0, 1], [1, 0]])


def bell_times_zero():
    amp = np.kron(BELL.amp, [1, 0])
    return pure_to_density(StateVector((2, 2, 2), amp))


@pytest.mark.parametrize(
    "dims, digits, expected",
    [((2, 2, 2), (0, 0, 0), 0), ((2, 2, 2), (1, 1, 1), 7), ((2, 3, 2), (1, 2, 0), 10)],
)
def test_flat_index_examples(dims, digits, expected):
    assert flat_index(dims, digits) == expected


def test_flat_index_matches_enumeration():
    dims = (2, 3, 2)
    for pos, lab in enumerate(labels(dims)):
        assert flat_index(dims, lab) == pos


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(2, 4), min_size=2, max_size=4), st.data())
def test_flat_multi_roundtrip(dims, data):
    D = int(np.prod(dims))
    k = data.draw(st.integers(0, D - 1))
    assert flat_index(dims, multi_index(dims, k)) == k


def test_flat_index_rejects_bad_digit():
    with pytest.raises(InvalidLabelError):
        flat_index((2, 2, 2), (0, 2, 0))


def test_state_invariants():
    with pytest.raises(NormalizationError):
        StateVector((2, 2), [1, 1, 0, 0])
    with pytest.raises(DimensionError):
        StateVector((2, 2), [1, 0, 0])
    with pytest.raises(DimensionError):
        StateVector((1, 2), [1, 0])
    with pytest.raises(SymmetryError):
        DensityMatrix((2, 2), np.diag([1, 0, 0, 0]) + np.eye(4, k=1) * 0.1)


def test_pure_to_density_basis_and_named_states():
    rho = pure_to_density(make_product((2, 2))).mat
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    assert np.array_equal(rho, expected)

    ghz = pure_to_density(make_ghz(3)).mat
    expected = np.zeros((8, 8))
    for i, j in itertools.product([0, 7], repeat=2):
        expected[i, j] = 0.5
    np.testing.assert_allclose(ghz, expected, atol=1e-15)

    w = pure_to_density(make_w(3)).mat
    expected = np.zeros((8, 8))
    for i, j in itertools.product([1, 2, 4], repeat=2):
        expected[i, j] = 1 / 3
    np.testing.assert_allclose(w, expected, atol=1e-15)
    assert purity(pure_to_density(make_w(3))) == pytest.approx(1.0, abs=1e-12)


def test_partial_trace_examples():
    ghz = pure_to_density(make_ghz(3))
    np.testing.assert_allclose(partial_trace(ghz, {1}).mat, np.diag([0.5, 0.5]), atol=1e-15)
    np.testing.assert_allclose(partial_trace_loops(ghz.mat, (2, 2, 2), {1}), np.diag([0.5, 0.5]))

    plus = np.array([1, 1]) / np.sqrt(2)
    prod = StateVector((2, 2), np.kron([1, 0], plus))
    np.testing.assert_allclose(partial_trace(prod, {1}).mat, np.diag([1, 0]), atol=1e-15)

    np.testing.assert_allclose(partial_trace(BELL, {2}).mat, np.diag([0.5, 0.5]), atol=1e-15)


@pytest.mark.parametrize("dims", [(2, 2, 2), (2, 3, 2), (3, 3), (2, 2, 2, 2)])
def test_partial_trace_matches_loop_oracle(dims):
    rng = np.random.default_rng(7)
    m = random_density(dims, rng)
    rho = DensityMatrix(dims, m)
    n = len(dims)
    for r in range(1, n):
        for keep in itertools.combinations(range(1, n + 1), r):
            red = partial_trace(rho, keep).mat
            np.testing.assert_allclose(red, partial_trace_loops(m, dims, keep), atol=1e-13)
            assert abs(np.trace(red) - 1) < 1e-12
            assert np.max(np.abs(red - red.conj().T)) < 1e-12


def test_partial_trace_rejects_bad_subsets():
    ghz = make_ghz(3)
    with pytest.raises(InvalidSubsetError):
        partial_trace(ghz, set())
    with pytest.raises(InvalidSubsetError):
        partial_trace(ghz, {1, 2, 3})


def test_purity_examples():
    assert purity(maximally_mixed((2, 2, 2))) == pytest.approx(1 / 8, abs=1e-15)
    assert purity(partial_trace(make_ghz(3), {1})) == pytest.approx(0.5, abs=1e-15)
    rho = pure_to_density(random_pure((2, 3), seed=1))
    assert purity(rho) == pytest.approx(1.0, abs=1e-12)


def test_complementary_reductions_have_equal_purity():
    for seed in range(10):
        psi = random_pure((2, 3, 2, 2), seed)
        for r in (1, 2):
            for keep in itertools.combinations(range(1, 5), r):
                rest = set(range(1, 5)) - set(keep)
                assert purity(partial_trace(psi, keep)) == pytest.approx(purity(partial_trace(psi, rest)), abs=1e-10)


def test_partial_transpose_examples():
    mm = maximally_mixed((2, 2, 2))
    assert np.array_equal(partial_transpose(mm, {1}), mm.mat)

    pt = partial_transpose(bell_times_zero(), {1})
    assert min_eigenvalue_selfadjoint(pt) == pytest.approx(-0.5, abs=1e-12)
    # eigenvalues {1/2 x3, -1/2, 0 x4} via the characteristic polynomial
    np.testing.assert_allclose(charpoly(pt), poly_from_roots([0.5] * 3 + [-0.5] + [0] * 4), atol=1e-12)

    rng = np.random.default_rng(0)
    ra, rb = random_density((2,), rng), random_density((2, 2), rng)
    prod = DensityMatrix((2, 2, 2), np.kron(ra, rb))
    assert min_eigenvalue_selfadjoint(partial_transpose(prod, {1})) > -1e-12


def test_partial_transpose_on_2x2_reference():
    # entry (i1 i2, j1 j2) moves to (j1 i2, i1 j2) when party 1 is transposed
    m = np.arange(16).reshape(4, 4).astype(complex)
    m = m + m.T
    pt = partial_transpose(_raw((2, 2), m), {1})
    for i1, i2, j1, j2 in itertools.product(range(2), repeat=4):
        assert pt[2 * j1 + i2, 2 * i1 + j2] == m[2 * i1 + i2, 2 * j1 + j2]


def test_partial_transpose_involution_and_hermitian():
    rng = np.random.default_rng(3)
    rho = DensityMatrix((2, 3, 2), random_density((2, 3, 2), rng))
    for g in ({1}, {1, 2}, {1, 3}):
        pt = partial_transpose(rho, g)
        assert np.max(np.abs(pt - pt.conj().T)) < 1e-15
        twice = partial_transpose(_raw(rho.dims, pt), g)
        assert np.array_equal(twice, rho.mat)
        assert np.trace(pt) == pytest.approx(1.0, abs=1e-14)


def _raw(dims, mat):
    # partial transposes need not be PSD; bypass validation for the round trip
    rho = DensityMatrix.__new__(DensityMatrix)
    object.__setattr__(rho, "dims", dims)
    object.__setattr__(rho, "mat", mat)
    return rho


def test_min_eigenvalue_examples():
    assert min_eigenvalue_selfadjoint(np.eye(8)) == pytest.approx(1.0, abs=1e-12)
    assert min_eigenvalue_selfadjoint(np.diag([0.3, 0.7])) == pytest.approx(0.3, abs=1e-12)
    bell_pt = partial_transpose(pure_to_density(BELL), {1})
    assert min_eigenvalue_selfadjoint(bell_pt) == pytest.approx(-0.5, abs=1e-9)
    np.testing.assert_allclose(charpoly(bell_pt), poly_from_roots([0.5, 0.5, 0.5, -0.5]), atol=1e-14)


def test_min_eigenvalue_against_jacobi():
    rng = np.random.default_rng(11)
    for D in (2, 4, 6, 8):
        g = rng.normal(size=(D, D)) + 1j * rng.normal(size=(D, D))
        h = g + g.conj().T
        assert min_eigenvalue_selfadjoint(h) == pytest.approx(jacobi_eigenvalues(h)[0], abs=1e-9)


def test_min_eigenvalue_rejects_non_hermitian():
    with pytest.raises(SymmetryError):
        min_eigenvalue_selfadjoint(np.array([[0, 1], [0, 0]]))


def test_apply_local_unitaries_examples():
    ghz = make_ghz(3)
    same = apply_local_unitaries(ghz, [np.eye(2)] * 3)
    np.testing.assert_allclose(same.amp, ghz.amp)

    flipped = apply_local_unitaries(ghz, [X, np.eye(2), np.eye(2)])
    expected = np.zeros(8)
    expected[[0b100, 0b011]] = 1 / np.sqrt(2)
    np.testing.assert_allclose(flipped.amp, expected, atol=1e-15)

    rho = pure_to_density(ghz)
    np.testing.assert_allclose(apply_local_unitaries(rho, [X, np.eye(2), np.eye(2)]).mat, pure_to_density(flipped).mat, atol=1e-15)


def test_apply_local_unitaries_preserves_spectrum():
    rng = np.random.default_rng(5)
    for _ in range(20):
        dims = (2, 3, 2)
        rho = DensityMatrix(dims, random_density(dims, rng))
        out = apply_local_unitaries(rho, random_local_unitaries(dims, rng))
        assert purity(out) == pytest.approx(purity(rho), abs=1e-10)
        np.testing.assert_allclose(np.linalg.eigvalsh(out.mat), np.linalg.eigvalsh(rho.mat), atol=1e-10)


def test_apply_local_unitaries_errors():
    ghz = make_ghz(3)
    with pytest.raises(UnitarityError):
        apply_local_unitaries(ghz, [np.eye(2), 2 * np.eye(2), np.eye(2)])
    with pytest.raises(DimensionError):
        apply_local_unitaries(ghz, [np.eye(2)] * 2)
    with pytest.raises(DimensionError):
        apply_local_unitaries(ghz, [np.eye(3), np.eye(2), np.eye(2)])


def test_linear_entropy_matches_purity():
    for seed in range(10):
        psi = random_pure((2, 3, 2), seed)
        for keep in ({1}, {2}, {1, 3}):
            assert linear_entropy_pure(psi, keep) == pytest.approx(1 - purity(partial_trace(psi, keep)), abs=1e-12)
    product = StateVector((2, 2), np.kron([0.6, 0.8], [0.8, 0.6j]))
    assert linear_entropy_pure(product, {1}) < 1e-30
