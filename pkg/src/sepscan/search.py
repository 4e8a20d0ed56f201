"""Census of the Bell-decomposable 2x3 simplex.

Enumerates an exact rational grid over the six mixing probabilities,
classifies every point with the closed-form criteria (cross-checking
the numeric route unless told not to), and reports per-class counts and
extremal points. Also bundles a reference point whose entanglement the
CCNR test misses, a both-routes evaluator for it, and a derivative-free
local refiner for exploring the simplex around such points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, TextIO

from .criteria import (
    DEFAULT_TOL,
    bd_ccnr_closed_form,
    bd_ppt_residuals,
    bd_pt_spectrum,
    partial_transpose,
    realign,
)
from .errors import InternalConsistencyError, ScanConfigError
from .formatting import fmt
from .linalg import eigvals_hermitian, trace_norm
from .states import BDParams, as_bd_params, bell_decomposable

#: Classification labels, in canonical output order.
CLASS_SEPARABLE = "separable"
CLASS_DETECTED = "entangled_ccnr_detected"
CLASS_BLIND = "entangled_ccnr_blind"
CLASSES = (CLASS_SEPARABLE, CLASS_DETECTED, CLASS_BLIND)

#: Allowed gap between the closed-form and numeric routes.
CROSS_CHECK_TOL = 1e-9

#: Bundled entangled (NPT) point whose realigned trace norm stays below 1,
#: so the CCNR test fails to flag it.
CCNR_BLIND_REFERENCE = BDParams((0.3, 0.0, 0.2, 0.1, 0.4, 0.0))

#: Objectives understood by refine_extremum.
MAX_CCNR_BLIND_VIOLATION = "max_ccnr_blind_violation"
MIN_PT_EIGENVALUE = "min_pt_eigenvalue"

_CSV_HEADER = "p1,p2,p3,p4,p5,p6,r1,r2,r3,min_pt_eig,ccnr,class"


@dataclass(frozen=True)
class ScanConfig:
    """Grid-scan settings.

    ``step`` must be a unit fraction 1/n so compositions of n into six
    parts enumerate the grid exactly. ``closed_form_only`` skips the
    per-point numeric cross-check, which is the expensive part.
    """

    step: float
    tol: float = DEFAULT_TOL
    closed_form_only: bool = False

    def __post_init__(self):
        if not (0.0 < self.step <= 1.0):
            raise ScanConfigError(f"step must be in (0, 1], got {self.step!r}")
        n = round(1.0 / self.step)
        if n < 1 or abs(1.0 / self.step - n) > 1e-9:
            raise ScanConfigError(
                f"step must be a unit fraction 1/n, got {self.step!r}"
            )
        if self.tol < 0:
            raise ScanConfigError(f"tol must be non-negative, got {self.tol!r}")

    @property
    def resolution(self) -> int:
        """Number of grid intervals n, where step = 1/n."""
        return round(1.0 / self.step)


@dataclass(frozen=True)
class ScanRecord:
    """Classification of a single grid point."""

    p: tuple[float, ...]
    residuals: tuple[float, float, float]
    min_pt_eig: float
    ccnr: float
    label: str

    def to_dict(self) -> dict:
        return {
            "p": list(self.p),
            "residuals": list(self.residuals),
            "min_pt_eig": self.min_pt_eig,
            "ccnr": self.ccnr,
            "class": self.label,
        }

    def csv_row(self) -> str:
        fields = [fmt(x) for x in self.p]
        fields += [fmt(x) for x in self.residuals]
        fields += [fmt(self.min_pt_eig), fmt(self.ccnr), self.label]
        return ",".join(fields)


@dataclass(frozen=True)
class ScanResult:
    """Full census of one grid scan.

    ``records`` holds every grid point in lexicographic composition
    order, so repeated scans of the same config serialize identically.
    ``extremal`` maps each observed class to its most negative
    ``min_pt_eig`` record and its largest ``ccnr`` record (first point
    in scan order wins ties).
    """

    config: ScanConfig
    total_points: int
    counts: dict[str, int]
    extremal: dict[str, dict[str, dict]]
    records: tuple[ScanRecord, ...]

    def summary_dict(self, include_records: bool = False) -> dict:
        out = {
            "step": self.config.step,
            "tol": self.config.tol,
            "closed_form_only": self.config.closed_form_only,
            "total_points": self.total_points,
            "counts": dict(self.counts),
            "extremal": self.extremal,
        }
        if include_records:
            out["records"] = [rec.to_dict() for rec in self.records]
        return out

    def write_csv(self, stream: TextIO) -> None:
        """One header line, then one row per grid point."""
        stream.write(_CSV_HEADER + "\n")
        for rec in self.records:
            stream.write(rec.csv_row() + "\n")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` non-negative ints summing to ``total``.

    Lexicographic order; there are C(total + parts - 1, parts - 1) of
    them.
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def classify_bd_point(params, tol: float = DEFAULT_TOL) -> str:
    """Closed-form class label of one simplex point.

    Separable when no residual drops below -tol; otherwise detected or
    blind according to whether the closed-form CCNR value exceeds
    1 + tol.
    """
    params = as_bd_params(params)
    if min(bd_ppt_residuals(params)) >= -tol:
        return CLASS_SEPARABLE
    if bd_ccnr_closed_form(params) > 1.0 + tol:
        return CLASS_DETECTED
    return CLASS_BLIND


def _cross_check(params, min_pt: float, ccnr: float) -> None:
    """Recompute both statistics numerically and compare."""
    rho = bell_decomposable(params)
    num_pt = float(eigvals_hermitian(partial_transpose(rho, "A"))[0])
    num_ccnr = trace_norm(realign(rho))
    if abs(num_pt - min_pt) > CROSS_CHECK_TOL:
        raise InternalConsistencyError(
            f"partial-transpose routes disagree at p={params.p}: "
            f"closed form {min_pt!r} vs numeric {num_pt!r}"
        )
    if abs(num_ccnr - ccnr) > CROSS_CHECK_TOL:
        raise InternalConsistencyError(
            f"realignment routes disagree at p={params.p}: "
            f"closed form {ccnr!r} vs numeric {num_ccnr!r}"
        )


def scan_bd_simplex(config: ScanConfig) -> ScanResult:
    """Classify every grid point of the BD simplex at spacing 1/n.

    Classification always uses the closed forms. Unless
    ``closed_form_only`` is set, every point is also evaluated
    numerically (partial-transpose spectrum and realignment SVD) and a
    disagreement beyond 1e-9 aborts the scan with
    InternalConsistencyError.
    """
    n = config.resolution
    counts = {label: 0 for label in CLASSES}
    records: list[ScanRecord] = []
    best_pt: dict[str, ScanRecord] = {}
    best_ccnr: dict[str, ScanRecord] = {}

    for comp in compositions(n, 6):
        params = BDParams(tuple(c / n for c in comp))
        residuals = bd_ppt_residuals(params)
        min_pt = float(bd_pt_spectrum(params)[0])
        ccnr = bd_ccnr_closed_form(params)
        label = classify_bd_point(params, config.tol)
        if not config.closed_form_only:
            _cross_check(params, min_pt, ccnr)
        rec = ScanRecord(params.p, residuals, min_pt, ccnr, label)
        records.append(rec)
        counts[label] += 1
        if label not in best_pt or rec.min_pt_eig < best_pt[label].min_pt_eig:
            best_pt[label] = rec
        if label not in best_ccnr or rec.ccnr > best_ccnr[label].ccnr:
            best_ccnr[label] = rec

    extremal = {
        label: {
            "min_pt_eig": best_pt[label].to_dict(),
            "max_ccnr": best_ccnr[label].to_dict(),
        }
        for label in CLASSES
        if label in best_pt
    }
    return ScanResult(
        config=config,
        total_points=len(records),
        counts=counts,
        extremal=extremal,
        records=tuple(records),
    )


@dataclass(frozen=True)
class ReproductionRecord:
    """Both-routes evaluation of one BD point."""

    params: tuple[float, ...]
    tol: float
    ppt_residuals: tuple[float, float, float]
    min_pt_eigenvalue: float
    ccnr_closed_form: float
    ccnr_numeric: float
    reproduced: bool

    def to_dict(self) -> dict:
        return {
            "params": list(self.params),
            "tol": self.tol,
            "ppt_residuals": list(self.ppt_residuals),
            "min_pt_eigenvalue": self.min_pt_eigenvalue,
            "ccnr_closed_form": self.ccnr_closed_form,
            "ccnr_numeric": self.ccnr_numeric,
            "reproduced": self.reproduced,
        }


def reproduce_counterexample(
    tol: float = DEFAULT_TOL, params=None
) -> ReproductionRecord:
    """Evaluate the bundled CCNR-blind point (or any BD point) both ways.

    ``reproduced`` is True when the point violates PPT by more than
    ``tol`` (some residual below -tol), both CCNR routes stay within the
    separable bound (value <= 1 + tol), and the routes agree within
    1e-9. Widening ``tol`` therefore makes reproduction harder, not
    easier: the violation must clear the wider margin.
    """
    params = CCNR_BLIND_REFERENCE if params is None else as_bd_params(params)
    residuals = bd_ppt_residuals(params)
    rho = bell_decomposable(params)
    min_pt = float(eigvals_hermitian(partial_transpose(rho, "A"))[0])
    closed = bd_ccnr_closed_form(params)
    numeric = trace_norm(realign(rho))
    reproduced = (
        min(residuals) < -tol
        and closed <= 1.0 + tol
        and numeric <= 1.0 + tol
        and abs(closed - numeric) <= CROSS_CHECK_TOL
    )
    return ReproductionRecord(
        params=params.p,
        tol=tol,
        ppt_residuals=residuals,
        min_pt_eigenvalue=min_pt,
        ccnr_closed_form=closed,
        ccnr_numeric=numeric,
        reproduced=reproduced,
    )


@dataclass(frozen=True)
class RefinementResult:
    """End point of a local refinement run."""

    params: BDParams
    objective: str
    value: float


def _blind_violation_score(params: BDParams) -> float:
    """PPT violation magnitude, or -inf where the CCNR test fires."""
    if bd_ccnr_closed_form(params) > 1.0:
        return float("-inf")
    return -min(bd_ppt_residuals(params))


def refine_extremum(start, objective: str, iterations: int) -> RefinementResult:
    """Greedy pair-transfer local search on the probability simplex.

    Each sweep tries shifting the current step of mass between every
    ordered coordinate pair and keeps the best strictly improving
    candidate; when no move improves, the step halves. The moves
    preserve the simplex constraint exactly, the internal score is
    monotone, and the whole procedure is deterministic.

    Objectives:

    * ``max_ccnr_blind_violation``: maximize -min(residuals) subject to
      the closed-form CCNR value staying <= 1 (points past the bound
      score -inf). ``value`` is that violation magnitude.
    * ``min_pt_eigenvalue``: minimize the closed-form smallest
      partial-transpose eigenvalue. ``value`` is the eigenvalue found.
    """
    start = as_bd_params(start)
    if iterations < 0:
        raise ValueError(f"iterations must be >= 0, got {iterations}")
    score: Callable[[BDParams], float]
    if objective == MAX_CCNR_BLIND_VIOLATION:
        score = _blind_violation_score
        report = lambda s: s
    elif objective == MIN_PT_EIGENVALUE:
        score = lambda q: -float(bd_pt_spectrum(q)[0])
        report = lambda s: -s
    else:
        raise ValueError(
            f"objective must be {MAX_CCNR_BLIND_VIOLATION!r} or "
            f"{MIN_PT_EIGENVALUE!r}, got {objective!r}"
        )

    best = start
    best_score = score(best)
    step = 0.25
    for _ in range(iterations):
        sweep_best: BDParams | None = None
        sweep_score = best_score
        for j in range(6):
            delta = min(step, best.p[j])
            if delta <= 0.0:
                continue
            for i in range(6):
                if i == j:
                    continue
                q = list(best.p)
                q[j] -= delta
                q[i] = min(q[i] + delta, 1.0)
                candidate = BDParams(tuple(q))
                s = score(candidate)
                if s > sweep_score:
                    sweep_best = candidate
                    sweep_score = s
        if sweep_best is None:
            step /= 2
        else:
            best = sweep_best
            best_score = sweep_score
    return RefinementResult(params=best, objective=objective, value=report(best_score))
