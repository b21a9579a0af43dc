"""Genuine multipartite entanglement: gme-concurrence and its computable lower bound."""

from .errors import GMEError
from .measure import PureMeasureReport, concurrence_bipartition, gghz_concurrence, gme_concurrence_pure, pure_bound_B
from .partitions import Bipartition, enumerate_bipartitions, swap_label
from .ppt import PptReport, ppt_classify
from .states import (
    FamilySpec,
    build_family,
    make_gghz,
    make_ghz,
    make_ghz_w_mix,
    make_w,
    random_biseparable,
    random_pure,
    white_noise,
)
from .tensor import (
    DensityMatrix,
    StateVector,
    apply_local_unitaries,
    flat_index,
    min_eigenvalue_selfadjoint,
    partial_trace,
    partial_transpose,
    pure_to_density,
    purity,
)
from .unitary import unitary_from_params
from .witness import BoundResult, OptimizerConfig, WitnessVector, bound_I, maximize_bound, noise_threshold

__version__ = "0.1.0"

__all__ = [
    "GMEError",
    "PureMeasureReport",
    "concurrence_bipartition",
    "gghz_concurrence",
    "gme_concurrence_pure",
    "pure_bound_B",
    "Bipartition",
    "enumerate_bipartitions",
    "swap_label",
    "PptReport",
    "ppt_classify",
    "FamilySpec",
    "build_family",
    "make_gghz",
    "make_ghz",
    "make_ghz_w_mix",
    "make_w",
    "random_biseparable",
    "random_pure",
    "white_noise",
    "DensityMatrix",
    "StateVector",
    "apply_local_unitaries",
    "flat_index",
    "min_eigenvalue_selfadjoint",
    "partial_trace",
    "partial_transpose",
    "pure_to_density",
    "purity",
    "unitary_from_params",
    "BoundResult",
    "OptimizerConfig",
    "WitnessVector",
    "bound_I",
    "maximize_bound",
    "noise_threshold",
]
