"""scikit-learn compatible wrapper around the optimized witness bound.

Rows of ``X`` are states: either ``(n_samples, D)`` amplitude vectors or a
``(n_samples, D, D)`` stack of density matrices.
"""

from __future__ import annotations

from math import prod

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .errors import DimensionError
from .tensor import DensityMatrix, StateVector, check_dims
from .witness import OptimizerConfig, maximize_bound


def check_state_batch(X, dims) -> list:
    """Validate ``X`` against ``dims`` and wrap each row as a state."""
    dims = check_dims(dims)
    D = prod(dims)
    X = np.asarray(X, dtype=complex)
    if X.ndim == 2 and X.shape[1] == D:
        return [StateVector(dims, row) for row in X]
    if X.ndim == 3 and X.shape[1:] == (D, D):
        return [DensityMatrix(dims, m) for m in X]
    raise DimensionError(f"expected shape (m, {D}) or (m, {D}, {D}) for dims {dims}, got {X.shape}")


class GMEBoundTransformer(BaseEstimator, TransformerMixin):
    """Map states to the optimized lower bound on their gme-concurrence.

    Parameters
    ----------
    dims : tuple of int
        Local dimensions of every party.
    restarts, max_iters, seed, tol
        Optimizer settings, see :class:`gmeconc.witness.OptimizerConfig`.
    warm_start : bool
        Start each sample's search from the previous sample's witness.

    Notes
    -----
    ``fit`` only validates; nothing is learned from data. After
    ``transform`` the maximizing witnesses are kept in ``witnesses_``.
    """

    def __init__(self, dims=(2, 2, 2), restarts=20, max_iters=2000, seed=0, tol=1e-10, warm_start=False):
        self.dims = dims
        self.restarts = restarts
        self.max_iters = max_iters
        self.seed = seed
        self.tol = tol
        self.warm_start = warm_start

    def _config(self) -> OptimizerConfig:
        return OptimizerConfig(self.restarts, self.max_iters, self.seed, self.tol)

    def fit(self, X, y=None):
        self.dims_ = check_dims(self.dims)
        self._config()
        check_state_batch(X, self.dims_)
        self.n_features_in_ = prod(self.dims_)
        return self

    def _bounds(self, X):
        check_is_fitted(self, "dims_")
        cfg = self._config()
        results, warm = [], None
        for state in check_state_batch(X, self.dims_):
            res = maximize_bound(state, cfg, warm_start=warm)
            results.append(res)
            if self.warm_start:
                warm = res.witness
        self.witnesses_ = [r.witness for r in results]
        return results

    def transform(self, X):
        """Column of clamped lower bounds, shape ``(n_samples, 1)``."""
        return np.array([[r.lower_bound] for r in self._bounds(X)])

    def predict(self, X):
        """1 where the bound certifies genuine multipartite entanglement."""
        return np.array([int(r.detected) for r in self._bounds(X)])
