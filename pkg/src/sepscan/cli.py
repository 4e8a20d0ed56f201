"""Command-line interface.

Four subcommands: ``check`` runs both criteria on a JSON state file,
``bd`` evaluates a Bell-decomposable point given on the command line,
``scan`` runs the grid census and writes scan.csv + summary.json, and
``repro`` evaluates the bundled CCNR-blind reference point.

Exit codes: 0 separable, 1 entangled, 2 no verdict (dimensions where
the PPT test is inconclusive), 64 usage or input-data errors, 66 when a
requested output location cannot be written. All floats printed by the
CLI are rounded to 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .criteria import (
    DEFAULT_TOL,
    bd_abc,
    bd_ccnr_closed_form,
    bd_ppt_residuals,
    ccnr_report,
    classify_2x3,
    partial_transpose,
    ppt_report,
    realign,
)
from .errors import (
    DimensionError,
    InvalidSimplexError,
    InvalidStateError,
    ScanConfigError,
    SepscanError,
)
from .formatting import fmt, round_floats
from .linalg import eigvals_hermitian, trace_norm
from .search import (
    CLASS_SEPARABLE,
    ScanConfig,
    classify_bd_point,
    reproduce_counterexample,
    scan_bd_simplex,
)
from .statefile import load_density
from .states import BDParams, bell_decomposable

EXIT_SEPARABLE = 0
EXIT_ENTANGLED = 1
EXIT_NO_VERDICT = 2
EXIT_USAGE = 64
EXIT_OUTPUT = 66

#: Slack allowed when renormalizing user-supplied probabilities.
INPUT_SIMPLEX_TOL = 1e-9


class _UsageError(Exception):
    """Argument or input-data problem that maps to exit code 64."""


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of calling sys.exit(2)."""

    def error(self, message):
        raise _UsageError(message)


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _emit(payload: dict) -> None:
    print(json.dumps(round_floats(payload), indent=2))


def _parse_number(text: str, what: str) -> float:
    """Parse a decimal or a fraction like 1/6."""
    try:
        if "/" in text:
            num, _, den = text.partition("/")
            return float(num) / float(den)
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"invalid {what} {text!r}") from None


def _parse_params(tokens) -> BDParams:
    """Six probabilities; renormalized when off by at most 1e-9."""
    raw = [_parse_number(t, "probability") for t in tokens]
    if any(x < -INPUT_SIMPLEX_TOL for x in raw):
        raise _UsageError(f"probabilities must be non-negative: {raw}")
    total = math.fsum(raw)
    if abs(total - 1.0) > INPUT_SIMPLEX_TOL:
        raise _UsageError(
            f"probabilities sum to {fmt(total)}, not 1 within {INPUT_SIMPLEX_TOL}"
        )
    clipped = [max(x, 0.0) for x in raw]
    total = math.fsum(clipped)
    try:
        return BDParams(tuple(x / total for x in clipped))
    except InvalidSimplexError as exc:
        raise _UsageError(str(exc)) from exc


def _cmd_check(args) -> int:
    try:
        rho = load_density(args.file)
    except InvalidStateError as exc:
        _fail(str(exc))
        return EXIT_USAGE
    ppt = ppt_report(rho, args.tol)
    ccnr = ccnr_report(rho, args.tol)
    try:
        verdict = classify_2x3(rho, args.tol)
    except DimensionError:
        verdict = None
    _emit(
        {
            "dims": [rho.dim_a, rho.dim_b],
            "ppt": ppt.to_dict(),
            "ccnr": ccnr.to_dict(),
            "classification": None if verdict is None else verdict.to_dict(),
        }
    )
    if verdict is None:
        return EXIT_NO_VERDICT
    return EXIT_SEPARABLE if verdict.separable else EXIT_ENTANGLED


def _cmd_bd(args) -> int:
    params = _parse_params(args.p)
    residuals = bd_ppt_residuals(params)
    triple = bd_abc(params)
    closed = bd_ccnr_closed_form(params)
    rho = bell_decomposable(params)
    numeric = trace_norm(realign(rho))
    min_pt = float(eigvals_hermitian(partial_transpose(rho, "A"))[0])
    label = classify_bd_point(params, args.tol)
    _emit(
        {
            "p": list(params.p),
            "residuals": {"r1": residuals[0], "r2": residuals[1], "r3": residuals[2]},
            "abc": {"a": triple.a, "b": triple.b, "c": triple.c},
            "min_pt_eigenvalue": min_pt,
            "ccnr_closed_form": closed,
            "ccnr_numeric": numeric,
            "class": label,
            "separable": label == CLASS_SEPARABLE,
        }
    )
    return EXIT_SEPARABLE if label == CLASS_SEPARABLE else EXIT_ENTANGLED


def _cmd_scan(args) -> int:
    try:
        config = ScanConfig(
            step=_parse_number(args.step, "step"),
            tol=args.tol,
            closed_form_only=args.closed_form_only,
        )
    except ScanConfigError as exc:
        _fail(str(exc))
        return EXIT_USAGE
    result = scan_bd_simplex(config)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        with open(out_dir / "scan.csv", "w", newline="") as stream:
            result.write_csv(stream)
        summary = round_floats(result.summary_dict(include_records=args.records))
        (out_dir / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    except OSError as exc:
        _fail(f"cannot write scan artifacts to {out_dir}: {exc}")
        return EXIT_OUTPUT
    _emit(
        {
            "total_points": result.total_points,
            "counts": dict(result.counts),
            "out": str(out_dir),
        }
    )
    return 0


def _cmd_repro(args) -> int:
    record = reproduce_counterexample(args.tol)
    if args.json:
        _emit(record.to_dict())
    else:
        r1, r2, r3 = record.ppt_residuals
        print("params:", " ".join(fmt(x) for x in record.params))
        print(f"ppt residuals: r1={fmt(r1)} r2={fmt(r2)} r3={fmt(r3)}")
        print(f"min pt eigenvalue: {fmt(record.min_pt_eigenvalue)}")
        print(f"ccnr closed form: {fmt(record.ccnr_closed_form)}")
        print(f"ccnr numeric: {fmt(record.ccnr_numeric)}")
        print("reproduced:", "yes" if record.reproduced else "no")
    return 0 if record.reproduced else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sepscan",
        description=(
            "Separability criteria (PPT and realignment/CCNR) for bipartite "
            "states. Exit codes: 0 separable, 1 entangled, 2 no verdict "
            "(dims other than 2x2/2x3/3x2), 64 usage or data error, 66 "
            "unwritable output."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = sub.add_parser(
        "check",
        help="run both criteria on a JSON state file",
        description=(
            "Evaluate the PPT and CCNR criteria on the density matrix in "
            'FILE ({"dims": [a, b], "matrix": [[re, im], ...]} row-major) '
            "and print both reports as JSON. A separability verdict is "
            "issued only for 2x2, 2x3 and 3x2 systems."
        ),
    )
    check.add_argument("file", help="path to the JSON state file")
    check.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help="criterion decision tolerance (default 1e-9)",
    )
    check.set_defaults(func=_cmd_check)

    bd = sub.add_parser(
        "bd",
        help="evaluate a Bell-decomposable 2x3 point",
        description=(
            "Evaluate one Bell-decomposable state from six mixing "
            "probabilities (decimals or fractions like 1/6; renormalized "
            "when the sum is off by at most 1e-9). Prints the closed-form "
            "residuals and invariants next to the numeric statistics."
        ),
    )
    bd.add_argument("p", nargs=6, metavar="P", help="six probabilities")
    bd.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help="criterion decision tolerance (default 1e-9)",
    )
    bd.set_defaults(func=_cmd_bd)

    scan = sub.add_parser(
        "scan",
        help="census of the Bell-decomposable simplex grid",
        description=(
            "Classify every point of the grid with spacing STEP (a unit "
            "fraction, e.g. 1/10) as separable, entangled_ccnr_detected or "
            "entangled_ccnr_blind. Writes scan.csv and summary.json into "
            "--out and prints the class counts."
        ),
    )
    scan.add_argument("--step", required=True, help="grid spacing, 1/N")
    scan.add_argument(
        "--out", default="scan_out", help="output directory (default scan_out)"
    )
    scan.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help="classification tolerance (default 1e-9)",
    )
    scan.add_argument(
        "--closed-form-only",
        action="store_true",
        help="skip the per-point numeric cross-check",
    )
    scan.add_argument(
        "--records",
        action="store_true",
        help="embed every per-point record in summary.json",
    )
    scan.set_defaults(func=_cmd_scan)

    repro = sub.add_parser(
        "repro",
        help="evaluate the bundled CCNR-blind reference point",
        description=(
            "Evaluate the bundled entangled point p = (0.3, 0, 0.2, 0.1, "
            "0.4, 0) along both routes. Exit 0 when reproduced: some PPT "
            "residual falls below -TOL while both CCNR values stay within "
            "1 + TOL and agree to 1e-9. Note a larger --tol demands a "
            "larger violation, so it makes reproduction stricter."
        ),
    )
    repro.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOL,
        help="decision tolerance (default 1e-9)",
    )
    repro.add_argument(
        "--json", action="store_true", help="print the record as JSON"
    )
    repro.set_defaults(func=_cmd_repro)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        _fail(str(exc))
        return EXIT_USAGE
    except SepscanError as exc:
        _fail(str(exc))
        return EXIT_USAGE


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
