"""Command-line front end: ``g2clasp verify | coeff | table``.

Exit codes: 0 when every check passes, 1 when a check fails or a value
cannot be produced (degenerate weight, pole), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import conjecture, recursions
from .coefficients import (
    DET_FORMULA,
    F1,
    K_FORMULAS,
    R_FORMULAS,
    AmbiguousMatrixIndex,
    CoeffKey,
    DegenerateWeight,
    MissingMatrixIndex,
    ProductFormula,
    UnknownDisplacement,
    all_keys,
    coeff,
    degenerate_atoms,
    det_explicit,
    specialize_coeff,
)
from .exactalg import PoleAtPoint
from .qint import bracket_text
from .report import NUMERIC, SYMBOLIC, VerificationReport

SCHEMA_VERSION = 1
TARGETS = ("recursions", "matrix", "conjecture", "qdim", "all")
#: smallest weights at which nothing used by the recursions is degenerate,
#: as computed by :func:`g2clasp.recursions.safe_weight_corners`
SAFE_A, SAFE_B = 6, 4

CSV_FIELDS = ["target", "id", "mode", "status", "witness", "elapsed_ms", "fund", "mu", "word", "sign", "probes"]


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def _seed(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return n


def _id_list(text: str) -> list[int]:
    try:
        ids = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ids, got {text!r}")
    bad = [i for i in ids if i not in recursions.RECURSIONS]
    if bad or not ids:
        raise argparse.ArgumentTypeError(f"recursion ids must be in 1..22, got {text!r}")
    return ids


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an exact rational like 3/2, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2clasp",
        description="Exact verification of the G2 triple-clasp coefficient formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("target", choices=TARGETS)
    v.add_argument("--mode", choices=(NUMERIC, SYMBOLIC), default=NUMERIC)
    v.add_argument("--points", type=_positive, default=5, help="probe points per check (numeric mode)")
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--format", choices=("text", "json", "csv"), default="text")
    v.add_argument("--parallelism", type=_positive, default=1)
    v.add_argument("--only", type=_id_list, default=None, help="comma-separated recursion ids")
    v.add_argument("--timing", action="store_true", help="include elapsed_ms (output is then not reproducible)")

    c = sub.add_parser("coeff", help="look up one coefficient")
    c.add_argument("fund", type=int, choices=(1, 2))
    c.add_argument("m", type=int)
    c.add_argument("n", type=int)
    c.add_argument("--i", type=int, choices=(1, 2))
    c.add_argument("--j", type=int, choices=(1, 2))
    c.add_argument("--a", type=int)
    c.add_argument("--b", type=int)
    c.add_argument("--q", type=_rational)

    t = sub.add_parser("table", help="export every coefficient at one weight")
    t.add_argument("--a", type=int, default=SAFE_A)
    t.add_argument("--b", type=int, default=SAFE_B)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


# -- verify -----------------------------------------------------------------


def run_verify(args) -> list[VerificationReport]:
    target = args.target
    if args.only is not None and target not in ("recursions", "all"):
        raise UsageError("--only applies to the recursions target")
    reports: list[VerificationReport] = []
    if target in ("recursions", "all"):
        reports += recursions.verify_all(
            args.mode, args.points, args.seed, ids=args.only, parallelism=args.parallelism
        )
    if target in ("matrix", "all"):
        reports.append(recursions.verify_matrix(args.mode, args.points, args.seed))
    if target in ("conjecture", "all"):
        reports += conjecture.verify_conjecture(args.mode, args.points, args.seed)
    if target in ("qdim", "all"):
        reports.append(conjecture.verify_qdim_loops(args.mode, args.points, args.seed))
    return reports


def summarize(reports: Sequence[VerificationReport], mode: str, seed: int, points: int) -> dict:
    passed = sum(r.passed for r in reports)
    return {
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
        "mode": mode,
        "seed": seed,
        "points": points if mode == NUMERIC else None,
    }


def render_json(reports, summary, timing: bool = False) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "summary": summary,
        "results": [r.to_dict(timing) for r in reports],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_csv(reports, timing: bool = False) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        row = r.to_dict(timing)
        if "mu" in row:
            row["mu"] = "{},{}".format(*row["mu"])
        if "probes" in row:
            row["probes"] = ";".join(" ".join(p) for p in row["probes"])
        w.writerow({k: ("" if row.get(k) is None else row.get(k)) for k in CSV_FIELDS})
    return buf.getvalue()


def render_text(reports, summary, timing: bool = False) -> str:
    lines = []
    for r in reports:
        line = f"{r.target:<10} {str(r.id):<8} {r.mode:<8} {r.status}"
        if "sign" in r.detail:
            line += f"  sign={r.detail['sign']:+d} word={r.detail['word'] or '(empty)'}"
        if timing and r.elapsed_ms is not None:
            line += f"  {r.elapsed_ms:.1f} ms"
        if r.witness:
            line += f"  witness: {r.witness}"
        lines.append(line)
    s = summary
    tail = f"{s['passed']}/{s['total']} passed ({s['mode']}"
    if s["mode"] == NUMERIC:
        tail += f", {s['points']} points, seed {s['seed']}"
    lines.append(tail + ")")
    return "\n".join(lines) + "\n"


def cmd_verify(args, out) -> int:
    reports = run_verify(args)
    summary = summarize(reports, args.mode, args.seed, args.points)
    if args.format == "json":
        out.write(render_json(reports, summary, args.timing))
    elif args.format == "csv":
        out.write(render_csv(reports, args.timing))
    else:
        out.write(render_text(reports, summary, args.timing))
    return 0 if summary["failed"] == 0 else 1


# -- coeff ------------------------------------------------------------------


def bracket_form(pf: ProductFormula, a: int, b: int) -> str:
    """The formula at the integer weight ``(a, b)`` as a product of brackets."""
    num = "".join(bracket_text((0, 0, f.at(a, b))) for f in pf.num) or "1"
    den = "".join(bracket_text((0, 0, f.at(a, b))) for f in pf.den)
    text = num
    if den:
        text += f"/({den})" if len(pf.den) > 1 else f"/{den}"
    return ("-" if pf.sign < 0 else "") + text


def _key_from_args(args) -> CoeffKey:
    idx = None
    if args.i is not None or args.j is not None:
        if args.i is None or args.j is None:
            raise UsageError("--i and --j must be given together")
        idx = (args.i, args.j)
    return CoeffKey(args.fund, (args.m, args.n), idx).validate()


def _formula_of(key: CoeffKey) -> Optional[ProductFormula]:
    if key.fund == F1:
        return K_FORMULAS[key.mu]
    if key.mu == (0, 0):
        return None
    return R_FORMULAS[key.mu]


def cmd_coeff(args, out) -> int:
    key = _key_from_args(args)
    if args.q is not None and (args.a is None or args.b is None):
        raise UsageError("--q needs --a and --b")
    if (args.a is None) != (args.b is None):
        raise UsageError("--a and --b must be given together")
    if args.a is None:
        out.write(f"{coeff(key)}\n")
        return 0
    value = specialize_coeff(key, args.a, args.b)
    if args.q is not None:
        out.write(f"{value.evaluate(args.q)}\n")
        return 0
    pf = _formula_of(key)
    out.write(f"{bracket_form(pf, args.a, args.b) if pf is not None else value}\n")
    return 0


# -- table ------------------------------------------------------------------


def table_rows(a: int, b: int) -> list[dict]:
    """Every coefficient plus the determinant, specialised at ``(a, b)``.

    Raises :class:`DegenerateWeight` listing every vanishing atom at once.
    """
    keys = all_keys()
    bad = []
    for key in keys:
        for f in degenerate_atoms(key, a, b):
            if f not in bad:
                bad.append(f)
    if bad:
        raise DegenerateWeight(bad, a, b)
    rows = []
    for key in keys:
        pf = _formula_of(key)
        rows.append(
            {
                "label": key.label(),
                "fund": key.fund,
                "m": key.mu[0],
                "n": key.mu[1],
                "i": key.idx[0] if key.idx else None,
                "j": key.idx[1] if key.idx else None,
                "brackets": bracket_form(pf, a, b) if pf is not None else None,
                "value": str(specialize_coeff(key, a, b)),
            }
        )
    rows.append(
        {
            "label": "D",
            "fund": 2,
            "m": 0,
            "n": 0,
            "i": None,
            "j": None,
            "brackets": bracket_form(DET_FORMULA, a, b),
            "value": str(det_explicit().fold(a, b)),
        }
    )
    return rows


TABLE_FIELDS = ["label", "fund", "m", "n", "i", "j", "brackets", "value"]


def cmd_table(args, out) -> int:
    rows = table_rows(args.a, args.b)
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "weight": {"a": args.a, "b": args.b}, "rows": rows}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        w = csv.DictWriter(out, fieldnames=TABLE_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: ("" if r[k] is None else r[k]) for k in TABLE_FIELDS})
    return 0


# -- entry point --------------------------------------------------------------


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {"verify": cmd_verify, "coeff": cmd_coeff, "table": cmd_table}
    try:
        return handlers[args.command](args, out)
    except (UsageError, UnknownDisplacement, MissingMatrixIndex, AmbiguousMatrixIndex) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        err.write(f"g2clasp: usage error: {msg}\n")
        return 2
    except (DegenerateWeight, PoleAtPoint) as exc:
        err.write(f"g2clasp: {type(exc).__name__}: {exc}\n")
        return 1


def main_entry() -> None:
    """Console-script wrapper turning the return code into the exit status."""
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # the reader went away (e.g. piped into head); not an error of ours
        devnull = open(os.devnull, "w")
        os.dup2(devnull.fileno(), sys.stdout.fileno())
        code = 0
    sys.exit(code)


if __name__ == "__main__":  # pragma: no cover
    main_entry()
