"""Separability criteria for bipartite quantum states.

Builds Bell-decomposable 2x3 density matrices, evaluates the positive
partial transpose (PPT) test and the realignment (CCNR) criterion both
numerically and in closed form, censuses the mixing-probability
simplex, and bundles a reference entangled point that the CCNR test
fails to detect.
"""

from .criteria import (
    ABCTriple,
    Classification,
    CriterionReport,
    bd_abc,
    bd_ccnr_closed_form,
    bd_ppt_residuals,
    bd_pt_spectrum,
    ccnr_report,
    classify_2x3,
    partial_transpose,
    ppt_report,
    realign,
)
from .errors import (
    DimensionError,
    InternalConsistencyError,
    InvalidSimplexError,
    InvalidStateError,
    NotHermitianError,
    ScanConfigError,
    SepscanError,
)
from .linalg import eigvals_hermitian, hs_inner, singular_values, trace_norm
from .search import (
    CCNR_BLIND_REFERENCE,
    CLASS_BLIND,
    CLASS_DETECTED,
    CLASS_SEPARABLE,
    RefinementResult,
    ReproductionRecord,
    ScanConfig,
    ScanRecord,
    ScanResult,
    refine_extremum,
    reproduce_counterexample,
    scan_bd_simplex,
)
from .statefile import load_density, save_density
from .states import (
    BDParams,
    BipartiteDensity,
    bell_decomposable,
    bell_state,
    maximally_mixed,
    random_density,
    random_separable,
)

__version__ = "0.1.0"

__all__ = [
    "ABCTriple",
    "BDParams",
    "BipartiteDensity",
    "CCNR_BLIND_REFERENCE",
    "CLASS_BLIND",
    "CLASS_DETECTED",
    "CLASS_SEPARABLE",
    "Classification",
    "CriterionReport",
    "DimensionError",
    "InternalConsistencyError",
    "InvalidSimplexError",
    "InvalidStateError",
    "NotHermitianError",
    "RefinementResult",
    "ReproductionRecord",
    "ScanConfig",
    "ScanConfigError",
    "ScanRecord",
    "ScanResult",
    "SepscanError",
    "bd_abc",
    "bd_ccnr_closed_form",
    "bd_ppt_residuals",
    "bd_pt_spectrum",
    "bell_decomposable",
    "bell_state",
    "ccnr_report",
    "classify_2x3",
    "eigvals_hermitian",
    "hs_inner",
    "load_density",
    "maximally_mixed",
    "partial_transpose",
    "ppt_report",
    "random_density",
    "random_separable",
    "realign",
    "refine_extremum",
    "reproduce_counterexample",
    "save_density",
    "scan_bd_simplex",
    "singular_values",
    "trace_norm",
]
