"""Separability criteria: positive partial transpose and realignment.

The generic numeric checks apply to any bipartite density matrix. For
Bell-decomposable 2x3 states both criteria also have closed forms: the
partial transpose splits into three symmetric 2x2 blocks over the ket
pairs {|11>,|23>}, {|12>,|21>}, {|13>,|22>}, and the realigned matrix
has exactly four nonzero singular values expressible through quadratic
invariants of the mixing probabilities. The closed forms are derived
independently of the numeric route and the two are cross-checked in the
tests and (by default) during scans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InternalConsistencyError
from .linalg import eigvals_hermitian, singular_values
from .states import BipartiteDensity, as_bd_params

#: Default decision tolerance for both criteria.
DEFAULT_TOL = 1e-9

#: Criterion names used in reports.
PPT = "ppt"
CCNR = "ccnr"

#: Dimensions where a PSD partial transpose is equivalent to separability.
_VERDICT_DIMS = {(2, 2), (2, 3), (3, 2)}

#: Numeric slack allowed before the closed forms are declared inconsistent.
_CLOSED_FORM_GUARD = 1e-12


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of one separability criterion on one state.

    ``value`` is the decision statistic: the minimum partial-transpose
    eigenvalue for PPT, the realigned trace norm for CCNR. ``witness``
    carries named diagnostics (the full spectrum or singular values) and
    a ``boundary`` flag set when the statistic lies within ``tolerance``
    of the decision threshold.
    """

    criterion: str
    value: float
    satisfied: bool
    tolerance: float
    witness: dict

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "value": self.value,
            "satisfied": self.satisfied,
            "tolerance": self.tolerance,
            "witness": dict(self.witness),
        }


@dataclass(frozen=True)
class Classification:
    """Separability verdict plus both criterion reports.

    Only issued where the PPT test is conclusive (2x2, 2x3, 3x2):
    ``separable`` mirrors the PPT outcome and ``ccnr_blind`` marks
    entangled states whose realigned trace norm stays at or below 1,
    i.e. entanglement the CCNR test misses.
    """

    separable: bool
    ppt: CriterionReport
    ccnr: CriterionReport
    ccnr_blind: bool

    def to_dict(self) -> dict:
        return {
            "separable": self.separable,
            "ppt": self.ppt.to_dict(),
            "ccnr": self.ccnr.to_dict(),
            "ccnr_blind": self.ccnr_blind,
        }


def partial_transpose(rho: BipartiteDensity, side: str = "A") -> np.ndarray:
    """Transpose the indices of one subsystem only.

    Returns a plain array: the result is Hermitian with unit trace but
    need not be positive semidefinite. Applying the same side twice
    gives back the original matrix exactly (it is a pure entry
    permutation).
    """
    da, db = rho.dim_a, rho.dim_b
    t = rho.matrix.reshape(da, db, da, db)
    side_key = side.upper()
    if side_key == "A":
        t = t.transpose(2, 1, 0, 3)
    elif side_key == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    return t.copy().reshape(da * db, da * db)


def ppt_report(rho: BipartiteDensity, tol: float = DEFAULT_TOL) -> CriterionReport:
    """PPT criterion: a separable state has a PSD partial transpose.

    ``value`` is the minimum eigenvalue of the A-side partial transpose
    (both sides share a spectrum); the full ascending spectrum rides
    along as the witness.
    """
    spectrum = eigvals_hermitian(partial_transpose(rho, "A"))
    value = float(spectrum[0])
    return CriterionReport(
        criterion=PPT,
        value=value,
        satisfied=value >= -tol,
        tolerance=tol,
        witness={
            "pt_spectrum": [float(x) for x in spectrum],
            "boundary": abs(value) <= tol,
        },
    )


def realign(rho: BipartiteDensity) -> np.ndarray:
    """Rearrange rho into its dim_a^2 x dim_b^2 realigned matrix.

    Row (i, k) at flat index (i-1)*dim_a + (k-1) and column (j, l) at
    flat index (j-1)*dim_b + (l-1) hold the entry <ij|rho|kl>: both
    A-side indices select the row, both B-side indices the column. The
    rearrangement preserves the Frobenius norm; its trace norm is the
    CCNR statistic.
    """
    da, db = rho.dim_a, rho.dim_b
    t = rho.matrix.reshape(da, db, da, db)
    return t.transpose(0, 2, 1, 3).copy().reshape(da * da, db * db)


def ccnr_report(rho: BipartiteDensity, tol: float = DEFAULT_TOL) -> CriterionReport:
    """CCNR criterion: a separable state has realigned trace norm <= 1.

    ``value`` is the trace norm of the realigned matrix; the descending
    singular values ride along as the witness. A value above 1 proves
    entanglement, a value at or below 1 proves nothing.
    """
    sv = singular_values(realign(rho))
    value = float(sv.sum())
    return CriterionReport(
        criterion=CCNR,
        value=value,
        satisfied=value <= 1.0 + tol,
        tolerance=tol,
        witness={
            "singular_values": [float(x) for x in sv],
            "boundary": abs(value - 1.0) <= tol,
        },
    )


def classify_2x3(rho: BipartiteDensity, tol: float = DEFAULT_TOL) -> Classification:
    """Conclusive separability classification for 2x2, 2x3, 3x2 states.

    In these dimensions a state is separable exactly when its partial
    transpose is PSD. Larger systems are refused with DimensionError
    because there the PPT test is only one-directional.
    """
    dims = (rho.dim_a, rho.dim_b)
    if dims not in _VERDICT_DIMS:
        raise DimensionError(
            "separability verdict is only available for 2x2, 2x3 and 3x2 "
            f"systems, got {dims[0]}x{dims[1]}"
        )
    ppt = ppt_report(rho, tol)
    ccnr = ccnr_report(rho, tol)
    return Classification(
        separable=ppt.satisfied,
        ppt=ppt,
        ccnr=ccnr,
        ccnr_blind=(not ppt.satisfied) and ccnr.satisfied,
    )


def _pair_sums_diffs(params) -> tuple[np.ndarray, np.ndarray]:
    """Within-pair sums and differences of the six mixing probabilities."""
    p = as_bd_params(params).p
    sums = np.array([p[0] + p[1], p[2] + p[3], p[4] + p[5]])
    diffs = np.array([p[0] - p[1], p[2] - p[3], p[4] - p[5]])
    return sums, diffs


def bd_ppt_residuals(params) -> tuple[float, float, float]:
    """Closed-form PPT residuals of a Bell-decomposable 2x3 state.

    Each residual is four times the determinant of one 2x2 block of the
    partially transposed matrix:

        r1 = (p1 + p2)(p3 + p4) - (p5 - p6)^2
        r2 = (p3 + p4)(p5 + p6) - (p1 - p2)^2
        r3 = (p5 + p6)(p1 + p2) - (p3 - p4)^2

    The state is PPT (and hence, in 2x3, separable) exactly when all
    three are non-negative.
    """
    s, d = _pair_sums_diffs(params)
    return (
        float(s[0] * s[1] - d[2] ** 2),
        float(s[1] * s[2] - d[0] ** 2),
        float(s[2] * s[0] - d[1] ** 2),
    )


def bd_pt_spectrum(params) -> np.ndarray:
    """Closed-form partial-transpose spectrum of a BD state, ascending.

    The partially transposed matrix is block diagonal over the ket pairs
    {|11>,|23>}, {|12>,|21>}, {|13>,|22>}; each symmetric block
    [[a, c], [c, b]] contributes (a + b)/2 +- sqrt(((a - b)/2)^2 + c^2).
    """
    s, d = _pair_sums_diffs(params)
    s = s / 2
    d = d / 2
    blocks = (
        (s[0], s[1], d[2]),
        (s[1], s[2], d[0]),
        (s[2], s[0], d[1]),
    )
    eigs = np.empty(6)
    for idx, (a, b, c) in enumerate(blocks):
        mid = (a + b) / 2
        radius = math.hypot((a - b) / 2, c)
        eigs[2 * idx] = mid - radius
        eigs[2 * idx + 1] = mid + radius
    eigs.sort()
    return eigs


@dataclass(frozen=True)
class ABCTriple:
    """Quadratic invariants behind the realigned spectrum of a BD state.

    The four nonzero squared singular values of the realigned matrix are
    {a, a, b + c, b - c}. All three fields are non-negative and b >= c
    at every simplex point; construction enforces both up to -1e-12 of
    rounding slack.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not (value >= -_CLOSED_FORM_GUARD):
                raise InternalConsistencyError(
                    f"invariant {name} = {value!r} must be non-negative"
                )
        if not (self.b - self.c >= -_CLOSED_FORM_GUARD):
            raise InternalConsistencyError(
                f"invariant b - c = {self.b - self.c!r} must be non-negative"
            )


def bd_abc(params) -> ABCTriple:
    """Closed-form quadratic invariants (a, b, c) of a BD state.

    With pair sums s_i and within-pair differences d_i:

        a = (d1^2 + d2^2 + d3^2) / 4
        b = (s1^2 + s2^2 + s3^2) / 4
        c = (s1 s2 + s2 s3 + s3 s1) / 4

    b - c equals (1/8) the sum of squared pair-sum differences, so it is
    non-negative on the whole simplex.
    """
    s, d = _pair_sums_diffs(params)
    a = float(np.dot(d, d) / 4)
    b = float(np.dot(s, s) / 4)
    c = float((s[0] * s[1] + s[1] * s[2] + s[2] * s[0]) / 4)
    return ABCTriple(a, b, c)


def bd_ccnr_closed_form(params) -> float:
    """Closed-form realigned trace norm of a BD state.

    Sums the four nonzero singular values:
    2 sqrt(a) + sqrt(b + c) + sqrt(b - c).
    """
    t = bd_abc(params)
    gap = max(t.b - t.c, 0.0)
    return float(2 * math.sqrt(max(t.a, 0.0)) + math.sqrt(t.b + t.c) + math.sqrt(gap))
