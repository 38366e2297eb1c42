"""Command-line front end.

Subcommands:

* ``eval``  -- uncertainty report + correlation record + classification for
  (A, B, state) read from JSON files;
* ``find``  -- search for a zero-correlation state of a pair;
* ``scan``  -- classify Haar-random states and write a CSV;
* ``demo``  -- self-checking walkthrough of the lambda_3/lambda_4 example;
* ``basis`` -- emit a generalized Gell-Mann basis as JSON.

Exit codes: 0 success, 1 failed demo golden check, 2 input or guard error,
3 finder did not converge.  Every output artifact is accompanied by a run
manifest (embedded in JSON output, sidecar file for CSV).  The environment
variable UNCERTAINTY_LAB_SEED provides the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from typing import Any, Sequence

import numpy as np

from . import __version__
from .core import (
    CommutingPair,
    DimensionMismatch,
    DimensionTooSmall,
    Observable,
    StateVector,
    Tolerances,
    ValidationError,
    observable_from_json_dict,
    observable_to_json_dict,
    state_from_json_dict,
)
from .correlations import correlation, correlation_record
from .finder import FinderConfig, find
from .gellmann import gell_mann, su3_lambda, two_level_state, uniform_superposition
from .relations import REPORT_CSV_HEADER, evaluate, report_csv_row
from .state_sets import ScanConfig, classify, membership_scan

_GUARD_ERRORS = (
    ValidationError,
    DimensionMismatch,
    DimensionTooSmall,
    CommutingPair,
    ValueError,
)

SEED_ENV_VAR = "UNCERTAINTY_LAB_SEED"


class CliError(Exception):
    """Input or guard failure; maps to exit code 2."""


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise CliError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from exc


def _tolerances(args: argparse.Namespace) -> Tolerances:
    return Tolerances(tol_zero=args.tol_zero, eps_spread=args.eps_spread)


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise CliError(f"input file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON in {path}: {exc}") from exc


def _load_observable(path: str, tol: Tolerances) -> Observable:
    try:
        return observable_from_json_dict(_load_json(path), tol)
    except ValidationError as exc:
        raise CliError(f"schema violation in {path}: {exc}") from exc


def _load_state(path: str, tol: Tolerances) -> StateVector:
    try:
        return state_from_json_dict(_load_json(path), tol)
    except ValidationError as exc:
        raise CliError(f"schema violation in {path}: {exc}") from exc


def _manifest(command: str, input_paths: Sequence[str], seed: int, tol: Tolerances) -> dict:
    return {
        "command": command,
        "input_paths": list(input_paths),
        "seed": seed,
        "tolerances": tol.to_json_dict(),
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        print(text)
    else:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
                if not text.endswith("\n"):
                    fh.write("\n")
        except OSError as exc:
            raise CliError(f"cannot write output path {out_path}: {exc}") from exc


def _fmt(x: float) -> str:
    """12 significant digits, with sub-tolerance noise snapped to zero."""
    return "0" if abs(x) < 1e-12 else f"{x:.12g}"


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_eval(args: argparse.Namespace) -> int:
    tol = _tolerances(args)
    a = _load_observable(args.observable_a, tol)
    b = _load_observable(args.observable_b, tol)
    phi = _load_state(args.state, tol)
    report = evaluate(a, b, phi, tol)
    record = correlation_record(a, b, phi, tol)
    try:
        classification = classify(a, b, phi, tol)
    except CommutingPair:
        classification = None
    manifest = _manifest(
        "eval", [args.observable_a, args.observable_b, args.state], args.seed, tol
    )
    if args.format == "csv":
        flags = (
            (
                classification.eigen_a,
                classification.eigen_b,
                classification.in_s_ab,
                classification.in_s_comm,
                classification.in_s_anti,
            )
            if classification is not None
            else (False, False, False, False, False)
        )
        row = report_csv_row(a.dim, args.seed, report, record.pearson, flags)
        _emit(REPORT_CSV_HEADER + "\n" + row, args.out)
        if args.out is not None:
            _emit(json.dumps(manifest, indent=2), args.out + ".manifest.json")
    else:
        payload = {
            "uncertainty": report.to_json_dict(),
            "correlation": record.to_json_dict(),
            "classification": None if classification is None else classification.to_json_dict(),
            "manifest": manifest,
        }
        _emit(json.dumps(payload, indent=2), args.out)
    return 0


def _cmd_find(args: argparse.Namespace) -> int:
    tol = _tolerances(args)
    a = _load_observable(args.observable_a, tol)
    b = _load_observable(args.observable_b, tol)
    cfg = FinderConfig(
        restarts=args.restarts,
        max_iters=args.max_iters,
        step_rule=args.step_rule,
        spread_floor=args.spread_floor,
        penalty_weight=args.penalty_weight,
        converge_tol=args.converge_tol,
        seed=args.seed,
    )
    result = find(a, b, cfg, tol)
    payload = {
        "result": result.to_json_dict(),
        "config": cfg.to_json_dict(),
        "manifest": _manifest("find", [args.observable_a, args.observable_b], args.seed, tol),
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0 if result.converged else 3


def _scan_header(dim: int) -> str:
    amp_cols = [f"amp{i}_{part}" for i in range(dim) for part in ("re", "im")]
    return ",".join(
        ["index"]
        + amp_cols
        + ["re_c", "im_c", "pearson", "eigen_a", "eigen_b", "s_ab", "s_comm", "s_anti"]
    )


def _cmd_scan(args: argparse.Namespace) -> int:
    tol = _tolerances(args)
    a = _load_observable(args.observable_a, tol)
    b = _load_observable(args.observable_b, tol)
    if args.samples < 1:
        raise CliError(f"--samples must be at least 1, got {args.samples}")
    config = ScanConfig(samples=args.samples, seed=args.seed, tolerances=tol)
    lines = [_scan_header(a.dim)]
    for index, (phi, cls) in enumerate(membership_scan(a, b, config)):
        c = correlation(a, b, phi)
        fields = [str(index)]
        for amp in phi.amps:
            fields.append(repr(float(amp.real)))
            fields.append(repr(float(amp.imag)))
        fields.append(repr(c.real))
        fields.append(repr(c.imag))
        fields.append("" if cls.pearson is None else repr(cls.pearson))
        fields.extend(
            str(int(flag))
            for flag in (cls.eigen_a, cls.eigen_b, cls.in_s_ab, cls.in_s_comm, cls.in_s_anti)
        )
        lines.append(",".join(fields))
    _emit("\n".join(lines), args.out)
    manifest = _manifest(
        "scan", [args.observable_a, args.observable_b], args.seed, tol
    )
    manifest["samples"] = args.samples
    manifest["output"] = args.out
    _emit(json.dumps(manifest, indent=2), args.out + ".manifest.json")
    return 0


def _cmd_basis(args: argparse.Namespace) -> int:
    basis = gell_mann(args.dim)
    payload = {
        "dim": basis.dim,
        "note": basis.note,
        "matrices": [observable_to_json_dict(m) for m in basis.matrices],
        "manifest": _manifest("basis", [], args.seed, _tolerances(args)),
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def _cmd_demo(_args: argparse.Namespace) -> int:
    tol = Tolerances()
    l3, l4 = su3_lambda(3), su3_lambda(4)
    phi2 = uniform_superposition(3)
    failures: list[str] = []

    def check(name: str, ok: bool, line: str) -> None:
        print(f"{line}  [{'PASS' if ok else 'FAIL'}]")
        if not ok:
            failures.append(name)

    values = [
        (0.3 + 0.35 * m) * complex(np.cos(2.0 * np.pi * m / 6.0), np.sin(2.0 * np.pi * m / 6.0))
        for m in range(6)
    ]
    worst = 0.0
    spreads_ok = True
    for a_val in values:
        for b_val in values:
            phi1 = two_level_state(a_val, b_val)
            worst = max(worst, abs(correlation(l3, l4, phi1)))
            rec = correlation_record(l3, l4, phi1, tol)
            spreads_ok = spreads_ok and rec.pearson is not None
    check(
        "zero-correlation family",
        worst <= 1e-12 and spreads_ok,
        f"max |C(l3,l4)| over 6x6 grid of nonzero (a, b) = {_fmt(worst)} with positive spreads",
    )

    c2 = correlation(l3, l4, phi2)
    check("C(phi2)", abs(c2 - 1.0 / 3.0) <= 1e-12, f"C(phi2) = {_fmt(c2.real)} (expected 1/3)")

    report = evaluate(l3, l4, phi2, tol)
    check("HR bound(phi2)", report.hr_bound <= 1e-12, f"HR bound(phi2) = {_fmt(report.hr_bound)}")
    check(
        "Schrodinger bound(phi2)",
        abs(report.schrodinger_bound - 1.0 / 3.0) <= 1e-12,
        f"Schrodinger bound(phi2) = {_fmt(report.schrodinger_bound)}",
    )
    expected_product = 2.0 / (3.0 * np.sqrt(3.0))
    check(
        "product(phi2)",
        abs(report.product - expected_product) <= 1e-12 and report.product >= 1.0 / 3.0,
        f"product(phi2) = {_fmt(report.product)} >= 1/3",
    )

    cls1 = classify(l3, l4, two_level_state(1.0, 1.0), tol)
    cls2 = classify(l3, l4, phi2, tol)
    check(
        "classification",
        cls1.in_s_ab and cls2.in_s_comm and not cls2.in_s_ab,
        "phi1(1,1) has zero correlation; phi2 kills only the commutator bound",
    )

    print()
    print(f"{'state':<12}{'delta_l3':>16}{'delta_l4':>16}{'product':>16}"
          f"{'hr_bound':>16}{'|C|':>16}{'pearson':>16}")
    for label, phi in (("phi1(1,1)", two_level_state(1.0, 1.0)), ("phi2", phi2)):
        rep = evaluate(l3, l4, phi, tol)
        rec = correlation_record(l3, l4, phi, tol)
        print(
            f"{label:<12}{_fmt(rep.delta_a):>16}{_fmt(rep.delta_b):>16}"
            f"{_fmt(rep.product):>16}{_fmt(rep.hr_bound):>16}"
            f"{_fmt(rep.general_bound):>16}"
            f"{_fmt(rec.pearson) if rec.pearson is not None else '-':>16}"
        )

    if failures:
        print()
        print("failed golden checks: " + ", ".join(failures))
        return 1
    return 0


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol-zero", type=float, default=1e-10,
                        help="threshold under which a scalar counts as zero")
    parser.add_argument("--eps-spread", type=float, default=1e-6,
                        help="threshold under which a spread counts as zero")
    parser.add_argument("--seed", type=int, default=None,
                        help=f"RNG seed (default: ${SEED_ENV_VAR} or 0)")
    parser.add_argument("--out", type=str, default=None, help="output path (default: stdout)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uncertainty-lab",
        description="Uncertainty relations, correlation functions and "
                    "zero-lower-bound states for Hermitian observable pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one (A, B, state) triple")
    p_eval.add_argument("observable_a")
    p_eval.add_argument("observable_b")
    p_eval.add_argument("state")
    p_eval.add_argument("--format", choices=("json", "csv"), default="json")
    _add_common(p_eval)

    p_find = sub.add_parser("find", help="search for a zero-correlation state")
    p_find.add_argument("observable_a")
    p_find.add_argument("observable_b")
    p_find.add_argument("--restarts", type=int, default=32)
    p_find.add_argument("--max-iters", type=int, default=2000)
    p_find.add_argument("--step-rule", choices=("fixed", "backtracking"), default="backtracking")
    p_find.add_argument("--spread-floor", type=float, default=0.1)
    p_find.add_argument("--penalty-weight", type=float, default=10.0)
    p_find.add_argument("--converge-tol", type=float, default=1e-10)
    _add_common(p_find)

    p_scan = sub.add_parser("scan", help="classify Haar-random states into a CSV")
    p_scan.add_argument("observable_a")
    p_scan.add_argument("observable_b")
    p_scan.add_argument("--samples", type=int, required=True)
    _add_common(p_scan)

    # the demo is a fixed self-check against golden values; it takes no knobs
    sub.add_parser("demo", help="self-checking lambda_3/lambda_4 walkthrough")

    p_basis = sub.add_parser("basis", help="emit a generalized Gell-Mann basis as JSON")
    p_basis.add_argument("--dim", type=int, required=True)
    _add_common(p_basis)

    return parser


_DISPATCH = {
    "eval": _cmd_eval,
    "find": _cmd_find,
    "scan": _cmd_scan,
    "demo": _cmd_demo,
    "basis": _cmd_basis,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "seed", -1) is None:
            args.seed = _default_seed()
        if args.command == "scan" and args.out is None:
            raise CliError("scan requires --out for the CSV body")
        return _DISPATCH[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _GUARD_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())
