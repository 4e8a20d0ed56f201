"""Acceptance suite: the six headline guarantees, one verdict line each.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
print; each test fails loudly if its criterion is not met.
"""

from __future__ import annotations

import contextlib
import io
import json
import math
import time

import numpy as np
from conftest import canonical_bd_matrix, random_simplex, random_unitary

from sepscan.cli import main
from sepscan.criteria import (
    bd_abc,
    bd_ccnr_closed_form,
    bd_ppt_residuals,
    ccnr_report,
    partial_transpose,
    ppt_report,
    realign,
)
from sepscan.linalg import eigvals_hermitian, singular_values, trace_norm
from sepscan.search import (
    CCNR_BLIND_REFERENCE,
    CLASS_BLIND,
    ScanConfig,
    reproduce_counterexample,
    scan_bd_simplex,
)
from sepscan.states import (
    BipartiteDensity,
    bell_decomposable,
    bell_state,
    random_separable,
)


def _verdict(name: str, ok: bool, detail: str) -> None:
    print(f"[acceptance] {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{name}: {detail}"


def test_criterion_1_counterexample_reproduction():
    start = time.perf_counter()
    with contextlib.redirect_stdout(io.StringIO()):
        exit_code = main(["repro"])
    record = reproduce_counterexample()
    elapsed = time.perf_counter() - start
    expected_ccnr = 2 * math.sqrt(0.065) + math.sqrt(0.1675) + math.sqrt(0.0025)
    ok = (
        exit_code == 0
        and abs(record.ppt_residuals[0] - (-0.07)) <= 1e-12
        and abs(record.min_pt_eigenvalue - (-0.05)) <= 1e-10
        and abs(record.ccnr_closed_form - expected_ccnr) <= 1e-12
        and abs(record.ccnr_closed_form - record.ccnr_numeric) <= 1e-9
        and elapsed < 1.0
    )
    _verdict(
        "counterexample reproduction",
        ok,
        f"exit {exit_code}, r1 {record.ppt_residuals[0]:.12g}, "
        f"min pt eig {record.min_pt_eigenvalue:.12g}, "
        f"ccnr {record.ccnr_closed_form:.12g}, {elapsed:.3f}s",
    )


def test_criterion_2_ccnr_closed_form_equivalence():
    rng = np.random.default_rng(2024)
    start = time.perf_counter()
    worst_value = 0.0
    worst_sv = 0.0
    for _ in range(1000):
        p = random_simplex(rng)
        realigned = realign(bell_decomposable(p))
        worst_value = max(
            worst_value, abs(bd_ccnr_closed_form(p) - trace_norm(realigned))
        )
        triple = bd_abc(p)
        expected = sorted(
            [
                math.sqrt(triple.a),
                math.sqrt(triple.a),
                math.sqrt(triple.b + triple.c),
                math.sqrt(max(triple.b - triple.c, 0.0)),
            ],
            reverse=True,
        )
        gap = np.abs(singular_values(realigned) - expected).max()
        worst_sv = max(worst_sv, float(gap))
    elapsed = time.perf_counter() - start
    ok = worst_value <= 1e-9 and worst_sv <= 1e-9 and elapsed < 10.0
    _verdict(
        "ccnr closed form vs numeric oracle",
        ok,
        f"max trace-norm gap {worst_value:.3e}, max sv gap {worst_sv:.3e}, "
        f"{elapsed:.2f}s over 1000 points",
    )


def test_criterion_3_ppt_residual_sign_agreement():
    rng = np.random.default_rng(30)
    disagreements = 0
    margined = 0
    for _ in range(1000):
        p = random_simplex(rng)
        min_residual = min(bd_ppt_residuals(p))
        if abs(min_residual) <= 1e-8:
            continue
        margined += 1
        min_eig = float(
            eigvals_hermitian(partial_transpose(bell_decomposable(p), "A"))[0]
        )
        if np.sign(min_residual) != np.sign(min_eig):
            disagreements += 1
    _verdict(
        "ppt residual sign agreement",
        disagreements == 0,
        f"{disagreements} disagreements over {margined} margined points",
    )


def test_criterion_4_necessity_on_separable_states():
    violations = 0
    worst_eig = 1.0
    worst_ccnr = 0.0
    for seed in range(500):
        rho = random_separable(2, 3, terms=seed % 8 + 1, seed=seed)
        ppt_value = ppt_report(rho).value
        ccnr_value = ccnr_report(rho).value
        worst_eig = min(worst_eig, ppt_value)
        worst_ccnr = max(worst_ccnr, ccnr_value)
        if ppt_value < -1e-9 or ccnr_value > 1 + 1e-9:
            violations += 1
    _verdict(
        "criteria necessity on separable states",
        violations == 0,
        f"{violations} violations over 500 samples; "
        f"min pt eig {worst_eig:.3e}, max ccnr {worst_ccnr:.12g}",
    )


def test_criterion_5_ccnr_weakness_census():
    start = time.perf_counter()
    result = scan_bd_simplex(ScanConfig(step=1 / 10))
    elapsed = time.perf_counter() - start
    reference = next(
        rec for rec in result.records if rec.p == CCNR_BLIND_REFERENCE.p
    )
    ccnr_only = sum(
        1
        for rec in result.records
        if rec.ccnr > 1 + 1e-9 and min(rec.residuals) >= -1e-9
    )
    ok = (
        result.total_points == 3003
        and sum(result.counts.values()) == 3003
        and result.counts[CLASS_BLIND] >= 1
        and reference.label == CLASS_BLIND
        and ccnr_only == 0
        and elapsed < 30.0
    )
    _verdict(
        "ccnr weakness census",
        ok,
        f"{result.counts[CLASS_BLIND]} blind points of {result.total_points}, "
        f"{ccnr_only} ccnr-only detections, {elapsed:.2f}s",
    )


def test_criterion_6_structural_invariants():
    basis = np.column_stack([bell_state(k) for k in range(1, 7)])
    gram_gap = float(np.abs(basis.conj().T @ basis - np.eye(6)).max())

    rng = np.random.default_rng(60)
    recon_gap = 0.0
    for _ in range(200):
        p = random_simplex(rng)
        gap = np.abs(bell_decomposable(p).matrix - canonical_bd_matrix(p)).max()
        recon_gap = max(recon_gap, float(gap))

    involution_exact = True
    for seed in range(3):
        rho = random_separable(2, 3, terms=4, seed=seed)
        for side in ("A", "B"):
            once = BipartiteDensity(2, 3, partial_transpose(rho, side))
            if not np.array_equal(partial_transpose(once, side), rho.matrix):
                involution_exact = False

    unitary_gap = 0.0
    for _ in range(20):
        m = (rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))) / np.sqrt(6)
        u = random_unitary(rng, 6)
        v = random_unitary(rng, 6)
        unitary_gap = max(unitary_gap, abs(trace_norm(u @ m @ v) - trace_norm(m)))

    def scan_fingerprint() -> str:
        result = scan_bd_simplex(ScanConfig(step=1 / 6, closed_form_only=True))
        buffer = io.StringIO()
        result.write_csv(buffer)
        return buffer.getvalue() + json.dumps(result.summary_dict(include_records=True))

    deterministic = scan_fingerprint() == scan_fingerprint()

    ok = (
        gram_gap <= 1e-12
        and recon_gap <= 1e-14
        and involution_exact
        and unitary_gap <= 1e-9
        and deterministic
    )
    _verdict(
        "structural invariants",
        ok,
        f"gram gap {gram_gap:.1e}, reconstruction gap {recon_gap:.1e}, "
        f"pt involution exact {involution_exact}, "
        f"unitary invariance gap {unitary_gap:.1e}, "
        f"scans deterministic {deterministic}",
    )
