"""Entanglement criteria for bipartite density matrices built on realignment,
partial transposition and the correlation operator ``rho - rho_A ⊗ rho_B``."""

from .bipartite import BipartiteDims, partial_trace, partial_transpose, realign, reduced_from_spectral, vec_row
from .criteria import CriterionReport, ccnr_value, evaluate, ppt_min_eig, pt_corr, realign_corr
from .estimator import EntanglementDetector
from .matcore import dagger, eig_hermitian, kron, schatten_norm, trace_norm
from .states import (
    DensityMatrix,
    ExampleParams,
    example_state,
    horodecki,
    max_entangled,
    random_density,
    random_separable,
    rho_eps,
    rho_eps_c,
    tail_sigma,
)
from .validation import InvalidStateError

__all__ = [
    "BipartiteDims",
    "CriterionReport",
    "DensityMatrix",
    "EntanglementDetector",
    "ExampleParams",
    "InvalidStateError",
    "ccnr_value",
    "dagger",
    "eig_hermitian",
    "evaluate",
    "example_state",
    "horodecki",
    "kron",
    "max_entangled",
    "partial_trace",
    "partial_transpose",
    "ppt_min_eig",
    "pt_corr",
    "random_density",
    "random_separable",
    "realign",
    "realign_corr",
    "reduced_from_spectral",
    "rho_eps",
    "rho_eps_c",
    "schatten_norm",
    "tail_sigma",
    "trace_norm",
    "vec_row",
]
