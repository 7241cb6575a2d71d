"""Command line front end.

Subcommands: hilbert, check, classify, csm, survey.  Ideals are given either
in the text grammar (x1^3, x2^3, x1*x2) or as a JSON object
{"n": ..., "a": [...], "m": [...]} describing pure powers plus the extra
generator.  Exit codes: 0 success, 1 usage or parse error, 2 internal
hypothesis violation, 3 survey found a disagreement between a classification
rule and the rank oracle.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .analysis import is_almost_centered, is_symmetric
from .classify import (
    HypothesisViolation,
    classify_maci,
    csm_decomposition,
    grid_from_json,
)
from .core import parse_ideal
from .oracle import lefschetz_report, multiplication_matrix
from .series import MaciSpec, hilbert_series, maci_from_ideal


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; 2 is reserved here, so turn
    # usage problems into ordinary errors mapped to exit code 1
    def error(self, message):
        raise UsageError(message)


def _load_ideal(text, nvars=None):
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return MaciSpec.from_dict(data).ideal()
    return parse_ideal(text, n=nvars)


def _load_grid(text):
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    return grid_from_json(json.loads(text))


def _form_coefficients(seed, n):
    rng = random.Random(seed)
    return [rng.randint(1, 9) for _ in range(n)]


@dataclass
class SurveyRow:
    n: int
    a: tuple
    m: tuple
    symmetric: bool
    almost_centered: bool
    wlp: bool
    slp: bool
    slp_predicted: object  # bool or None when no rule applies
    agreement: object  # bool or None, exactly when slp_predicted is None
    ms: float

    def as_dict(self):
        return {
            "n": self.n,
            "a": list(self.a),
            "m": list(self.m),
            "symmetric": self.symmetric,
            "almost_centered": self.almost_centered,
            "wlp": self.wlp,
            "slp": self.slp,
            "slp_predicted": self.slp_predicted,
            "agreement": self.agreement,
            "ms": self.ms,
        }


def _survey_one(key):
    spec = MaciSpec(key[0], key[1])
    start = time.perf_counter()
    verdict = classify_maci(spec)
    report = lefschetz_report(spec.ideal())
    ms = round((time.perf_counter() - start) * 1000.0, 3)
    predicted = None if verdict is None else verdict.slp
    return SurveyRow(
        n=spec.n,
        a=spec.a,
        m=tuple(spec.m),
        symmetric=is_symmetric(report.series),
        almost_centered=is_almost_centered(report.series),
        wlp=report.wlp,
        slp=report.slp,
        slp_predicted=predicted,
        agreement=None if predicted is None else report.slp == predicted,
        ms=ms,
    )


def survey_rows(specs, jobs=1):
    """One row per spec, in grid order regardless of parallelism."""
    keys = [(spec.a, tuple(spec.m)) for spec in specs]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_survey_one, keys, chunksize=16))
    return [_survey_one(k) for k in keys]


SURVEY_COLUMNS = (
    "n",
    "a",
    "m",
    "symmetric",
    "almost_centered",
    "wlp",
    "slp",
    "slp_predicted",
    "agreement",
    "ms",
)


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (tuple, list)):
        return " ".join(str(v) for v in value)
    return str(value)


def write_survey_csv(rows, fh):
    writer = csv.writer(fh)
    writer.writerow(SURVEY_COLUMNS)
    for row in rows:
        data = row.as_dict()
        writer.writerow([_csv_cell(data[col]) for col in SURVEY_COLUMNS])


def write_survey_json(rows, fh):
    json.dump([row.as_dict() for row in rows], fh, indent=1)
    fh.write("\n")


def _emit(args, payload, human):
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        print(human)


def cmd_hilbert(args):
    ideal = _load_ideal(args.ideal, args.nvars)
    series = hilbert_series(ideal)
    human = f"{series.to_text()}\ncoefficients: {', '.join(str(c) for c in series.coeffs)}"
    _emit(args, series.as_dict(), human)
    return 0


def cmd_check(args):
    ideal = _load_ideal(args.ideal, args.nvars)
    coeffs = None
    if args.random_form is not None:
        coeffs = _form_coefficients(args.random_form, ideal.n)
    if args.matrix is not None:
        i, t = args.matrix
        for row in multiplication_matrix(ideal, i, t, coeffs):
            print(" ".join(str(x) for x in row))
        return 0
    report = lefschetz_report(ideal, coeffs)
    payload = report.as_dict()
    if coeffs is not None:
        payload["form_coefficients"] = coeffs
    lines = [f"hilbert series: {report.series.to_text()}"]
    if coeffs is not None:
        lines.append(f"linear form coefficients: {coeffs}")
    if args.wlp or not args.slp:
        wlp_wit = [w for w in report.witnesses if w[1] == 1]
        lines.append(f"wlp: {str(report.wlp).lower()}")
        if wlp_wit:
            lines.append("failing wlp maps: " + ", ".join(f"(i={i}, t={t})" for i, t in wlp_wit))
    if args.slp or not args.wlp:
        lines.append(f"slp: {str(report.slp).lower()}")
        if report.witnesses:
            lines.append(
                "failing maps: " + ", ".join(f"(i={i}, t={t})" for i, t in report.witnesses)
            )
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_classify(args):
    ideal = _load_ideal(args.ideal, args.nvars)
    spec = maci_from_ideal(ideal)
    verdict = classify_maci(spec)
    if verdict is None:
        # no closed-form rule covers this spec; fall back to the oracle
        report = lefschetz_report(spec.ideal())
        payload = {
            "classified": False,
            "oracle": {"wlp": report.wlp, "slp": report.slp},
        }
        human = (
            "no classification rule applies; oracle verdict: "
            f"wlp {str(report.wlp).lower()}, slp {str(report.slp).lower()}"
        )
        _emit(args, payload, human)
        return 0
    payload = {"classified": True, **verdict.as_dict()}
    human = f"slp: {str(verdict.slp).lower()} (rule: {verdict.rule})"
    _emit(args, payload, human)
    return 0


def cmd_csm(args):
    ideal = _load_ideal(args.ideal, args.nvars)
    spec = maci_from_ideal(ideal)
    var = None if args.var is None else args.var - 1
    dec = csm_decomposition(spec, var)
    total = dec.total_series()
    series = hilbert_series(ideal)
    if total != series:
        raise HypothesisViolation(
            f"widened piece series sum to {total.as_dict()} but the quotient has {series.as_dict()}"
        )
    payload = dec.as_dict()
    payload["series_identity"] = True
    lines = [f"linear form: x{dec.variable + 1}"]
    for k, piece in enumerate(dec.pieces, start=1):
        gens = ", ".join(
            "*".join(f"x{i+1}^{e}" if e > 1 else f"x{i+1}" for i, e in enumerate(g) if e)
            for g in piece.ideal.sorted_generators()
        )
        lines.append(
            f"piece {k}: ({gens}) in {piece.ideal.n} variables, "
            f"shift {piece.shift}, multiplier {piece.multiplier}"
        )
    lines.append(f"series identity: ok ({series.to_text()})")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_survey(args):
    specs = _load_grid(args.grid)
    rows = survey_rows(specs, jobs=args.jobs)
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out.endswith(".json") else "csv"
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        if fmt == "csv":
            write_survey_csv(rows, fh)
        else:
            write_survey_json(rows, fh)
    disagreements = sum(1 for r in rows if r.agreement is False)
    print(f"wrote {len(rows)} rows to {args.out}; disagreements: {disagreements}")
    return 3 if disagreements else 0


def _build_parser():
    parser = _Parser(
        prog="lefschetz",
        description="Hilbert series and Lefschetz properties of Artinian monomial algebras",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for survey (default: available cores)",
    )
    parser.add_argument(
        "--nvars",
        type=int,
        default=None,
        help="declared variable count (default: highest index used)",
    )
    parser.add_argument(
        "--random-form",
        type=int,
        metavar="SEED",
        default=None,
        help="use seeded random positive coefficients for the linear form (sanity mode)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert series of an Artinian quotient")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("check", help="weak/strong Lefschetz verdict by exact ranks")
    p.add_argument("ideal")
    p.add_argument("--wlp", action="store_true", help="report only the weak property")
    p.add_argument("--slp", action="store_true", help="report only the strong property")
    p.add_argument(
        "--matrix",
        nargs=2,
        type=int,
        metavar=("I", "T"),
        default=None,
        help="dump the matrix of l^T from degree I instead of checking",
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="closed-form classification when a rule applies")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("csm", help="central simple module decomposition of a spec")
    p.add_argument("ideal")
    p.add_argument("--var", type=int, default=None, help="1-based variable index to use")
    p.set_defaults(func=cmd_csm)

    p = sub.add_parser("survey", help="sweep a grid and cross-verify against the oracle")
    p.add_argument("grid", help='JSON like {"family": "support_two", "n": [2, 3], "max_exp": 4} or @file')
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.set_defaults(func=cmd_survey)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except HypothesisViolation as exc:
        print(f"internal hypothesis violation: {exc}", file=sys.stderr)
        return 2
    except (OverflowError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
