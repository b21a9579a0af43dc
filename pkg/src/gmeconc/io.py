"""Reading and writing state files.

A state file is a JSON document::

    {"dims": [2, 2, 2], "amp": [[0.7071, 0.0], [0.0, 0.0], ...]}

or, for mixed states, ``"mat"`` holding ``D`` rows of ``D`` ``[re, im]``
pairs in place of ``"amp"``. Flat indices are row-major with party 1 most
significant. Loading validates normalization, Hermiticity, unit trace and
positivity.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import numpy as np

from .errors import GMEError
from .tensor import DensityMatrix, StateVector, check_dims


class StateFileError(GMEError):
    pass


def _pairs(arr: np.ndarray) -> list:
    return np.stack([arr.real, arr.imag], axis=-1).tolist()


def _complex(obj, what: str) -> np.ndarray:
    a = np.asarray(obj, dtype=float)
    if a.ndim < 1 or a.shape[-1] != 2:
        raise StateFileError(f"{what} entries must be [re, im] pairs")
    return a[..., 0] + 1j * a[..., 1]


def state_to_dict(state) -> dict:
    if isinstance(state, StateVector):
        return {"dims": list(state.dims), "amp": _pairs(state.amp)}
    return {"dims": list(state.dims), "mat": _pairs(state.mat)}


def state_from_dict(doc: dict) -> Union[StateVector, DensityMatrix]:
    if "dims" not in doc:
        raise StateFileError("state document has no 'dims'")
    dims = check_dims(doc["dims"])
    has_amp, has_mat = "amp" in doc, "mat" in doc
    if has_amp == has_mat:
        raise StateFileError("state document needs exactly one of 'amp' or 'mat'")
    if has_amp:
        return StateVector(dims, _complex(doc["amp"], "amp"))
    mat = _complex(doc["mat"], "mat")
    if mat.ndim != 2:
        raise StateFileError("'mat' must be a list of rows")
    return DensityMatrix(dims, mat)


def dumps_state(state) -> str:
    """JSON text with one amplitude (or matrix row) per line."""
    doc = state_to_dict(state)
    key = "amp" if "amp" in doc else "mat"
    rows = ",\n  ".join(json.dumps(r) for r in doc[key])
    return f'{{"dims": {json.dumps(doc["dims"])},\n "{key}": [\n  {rows}\n ]}}\n'


def save_state(state, path) -> None:
    Path(path).write_text(dumps_state(state))


def load_state(path) -> Union[StateVector, DensityMatrix]:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise StateFileError(f"cannot read state file {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise StateFileError("state file must hold a JSON object")
    return state_from_dict(doc)
