"""Batch front end: CSV/TSV in, exact report (JSON or text) and SVG out.

Exit codes: 0 success, 1 parse error, 2 degenerate classes (only one label
present), 3 internal identity violation. Code 3 can only mean an
implementation bug, never a data problem: the report pipeline re-asserts the
exact identities (trapezoid area = balanced Stieltjes integral, strict pair
probability = right-limit integral, area - probability = tie correction)
before emitting anything.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, Literal

from .core import Dataset, DegenerateClassesError, Rational, dataset_from_pairs
from .pairwise import (
    TieReport,
    hypothesis_holds,
    pair_probability_bruteforce,
    pair_probability_fast,
    tie_report,
)
from .roc import RocCurve, auc_trapezoid, roc_curve
from .stieltjes import integrate, negative_differential, rate_step_function
from .contlab import LaplaceTieModel, area_consistency_check, jump_certificate

_POSITIVE_LABELS = {"1", "pos", "true"}
_NEGATIVE_LABELS = {"0", "neg", "false"}


class ParseError(ValueError):
    """Malformed input record; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IdentityError(RuntimeError):
    """An exact identity the implementation guarantees failed to hold."""


@dataclass(frozen=True)
class RocReport:
    """Everything the evaluation produces for one dataset, exactly."""

    auc: Rational
    pair_probability: Rational
    tie: TieReport
    hypothesis_holds: bool
    curve: RocCurve
    n_pos: int
    n_neg: int

    def __post_init__(self) -> None:
        _require(
            self.auc - self.pair_probability == self.tie.correction,
            "area minus pair probability must equal the tie correction",
        )
        no_ties = not self.tie.shared_scores
        _require(
            self.hypothesis_holds == no_ties
            and no_ties == (self.auc == self.pair_probability),
            "no-tie condition, empty tie inventory, and area = probability "
            "must coincide",
        )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise IdentityError(message)


def _parse_label(text: str) -> bool | None:
    token = text.strip().lower()
    if token in _POSITIVE_LABELS:
        return True
    if token in _NEGATIVE_LABELS:
        return False
    return None


def parse_input(text: str, fmt: Literal["csv", "tsv"] = "csv") -> Dataset:
    """Parse `score,label` records; scores are decimal text, read exactly.

    Labels accept 1/0, pos/neg, true/false (case-insensitive). A single
    leading header line is skipped when neither of its fields makes sense as
    data. Raises ParseError with the offending line number, or
    DegenerateClassesError when only one class is present.
    """
    delimiter = "," if fmt == "csv" else "\t"
    pairs: list[tuple[Fraction, bool]] = []
    reader = csv.reader(io.StringIO(text), delimiter=delimiter)
    first_data_row = True
    for row in reader:
        line = reader.line_num
        if not row or all(not field.strip() for field in row):
            continue
        if len(row) != 2:
            raise ParseError(line, f"expected 2 fields, got {len(row)}")
        score_text, label_text = row[0].strip(), row[1].strip()
        label = _parse_label(label_text)
        try:
            value = Fraction(score_text)
        except (ValueError, ZeroDivisionError):
            if first_data_row and label is None:
                first_data_row = False  # header line
                continue
            raise ParseError(line, f"cannot read score {score_text!r}") from None
        if label is None:
            raise ParseError(line, f"cannot read label {label_text!r}")
        pairs.append((value, label))
        first_data_row = False
    return dataset_from_pairs(pairs)


def run_report(d: Dataset) -> RocReport:
    """Compute the full report and assert the exact identities on the way."""
    curve = roc_curve(d)
    auc = auc_trapezoid(curve)
    pair = pair_probability_fast(d)
    tie = tie_report(d)

    tpr_step = rate_step_function(d, "positive")
    neg_rate_diff = negative_differential(rate_step_function(d, "negative"))
    _require(
        integrate("balanced", tpr_step, neg_rate_diff) == auc,
        "balanced Stieltjes integral must equal the trapezoid area",
    )
    _require(
        integrate("right", tpr_step, neg_rate_diff) == pair,
        "right-limit Stieltjes integral must equal the pair probability",
    )

    return RocReport(
        auc=auc,
        pair_probability=pair,
        tie=tie,
        hypothesis_holds=hypothesis_holds(d),
        curve=curve,
        n_pos=d.n_pos,
        n_neg=d.n_neg,
    )


def _frac(q: Rational) -> str:
    return f"{q.numerator}/{q.denominator}"


def _dec17(q: Rational) -> str:
    """Decimal rendering, exact up to 17 significant digits (advisory only)."""
    with localcontext() as ctx:
        ctx.prec = 17
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def emit_report(r: RocReport, mode: Literal["json", "text"] = "json") -> str:
    """Serialize a report; fraction strings are the primary representation."""
    if mode == "json":
        import json

        payload = {
            "n_pos": r.n_pos,
            "n_neg": r.n_neg,
            "hypothesis_holds": r.hypothesis_holds,
            "auc": _frac(r.auc),
            "auc_decimal": _dec17(r.auc),
            "pair_probability": _frac(r.pair_probability),
            "pair_probability_decimal": _dec17(r.pair_probability),
            "tie_correction": _frac(r.tie.correction),
            "tie_correction_decimal": _dec17(r.tie.correction),
            "tie_bound": _frac(r.tie.bound),
            "tie_bound_decimal": _dec17(r.tie.bound),
            "shared_scores": [
                {
                    "score": _frac(s.score),
                    "pos_mass": _frac(s.pos_mass),
                    "neg_mass": _frac(s.neg_mass),
                }
                for s in r.tie.shared_scores
            ],
            "curve": [[_frac(p.fpr), _frac(p.tpr)] for p in r.curve.points],
        }
        return json.dumps(payload, indent=2) + "\n"

    lines = [
        f"observations      {r.n_pos + r.n_neg} ({r.n_pos} positive, {r.n_neg} negative)",
        f"hypothesis_holds  {str(r.hypothesis_holds).lower()}",
        f"auc               {_frac(r.auc)} = {_dec17(r.auc)}",
        f"pair_probability  {_frac(r.pair_probability)} = {_dec17(r.pair_probability)}",
        f"tie_correction    {_frac(r.tie.correction)} = {_dec17(r.tie.correction)}",
        f"tie_bound         {_frac(r.tie.bound)} = {_dec17(r.tie.bound)}",
    ]
    for s in r.tie.shared_scores:
        lines.append(
            f"shared_score      {_frac(s.score)} "
            f"(pos_mass {_frac(s.pos_mass)}, neg_mass {_frac(s.neg_mass)})"
        )
    lines.append(
        "curve             " + " ".join(f"({_frac(p.fpr)}, {_frac(p.tpr)})" for p in r.curve.points)
    )
    return "\n".join(lines) + "\n"


def emit_curve_svg(c: RocCurve, width_px: int = 480) -> str:
    """Standalone SVG: the curve polyline, the chance diagonal, ticks at 0, 1/2, 1."""
    if width_px < 64:
        raise ValueError("width must be at least 64 px")
    w = width_px
    margin = max(10, w // 8)
    span = w - 2 * margin

    def fx(v: Rational | float) -> float:
        return margin + float(v) * span

    def fy(v: Rational | float) -> float:
        return w - margin - float(v) * span

    ticks = [(Fraction(0), "0"), (Fraction(1, 2), "0.5"), (Fraction(1), "1")]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{w}" viewBox="0 0 {w} {w}">',
        f'<rect x="{margin}" y="{margin}" width="{span}" height="{span}" '
        f'fill="white" stroke="black" stroke-width="1"/>',
    ]
    for t, label in ticks:
        parts.append(
            f'<line x1="{fx(t):.2f}" y1="{fy(0):.2f}" x2="{fx(t):.2f}" '
            f'y2="{fy(0) + 6:.2f}" stroke="black"/>'
        )
        parts.append(
            f'<line x1="{fx(0):.2f}" y1="{fy(t):.2f}" x2="{fx(0) - 6:.2f}" '
            f'y2="{fy(t):.2f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{fx(t):.2f}" y="{fy(0) + 18:.2f}" font-size="11" '
            f'text-anchor="middle">{label}</text>'
        )
        parts.append(
            f'<text x="{fx(0) - 9:.2f}" y="{fy(t) + 4:.2f}" font-size="11" '
            f'text-anchor="end">{label}</text>'
        )
    parts.append(
        f'<line x1="{fx(0):.2f}" y1="{fy(0):.2f}" x2="{fx(1):.2f}" y2="{fy(1):.2f}" '
        f'stroke="gray" stroke-dasharray="4 3"/>'
    )
    coords = " ".join(f"{fx(p.fpr):.2f},{fy(p.tpr):.2f}" for p in c.points)
    parts.append(
        f'<polyline points="{coords}" fill="none" stroke="crimson" stroke-width="2"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def identity_suite(d: Dataset) -> list[tuple[str, bool, str]]:
    """Run every exact identity on one dataset; (name, passed, detail) rows."""
    curve = roc_curve(d)
    auc = auc_trapezoid(curve)
    fast = pair_probability_fast(d)
    brute = pair_probability_bruteforce(d)
    tie = tie_report(d)
    tpr_step = rate_step_function(d, "positive")
    neg_rate_diff = negative_differential(rate_step_function(d, "negative"))
    balanced = integrate("balanced", tpr_step, neg_rate_diff)
    right = integrate("right", tpr_step, neg_rate_diff)

    shift = dataset_from_pairs(
        ((Fraction(7) * s - 3) / 5, pos) for s, pos in d.observations
    )
    results = [
        (
            "trapezoid area = balanced Stieltjes integral",
            auc == balanced,
            f"{_frac(auc)} vs {_frac(balanced)}",
        ),
        (
            "strict pair probability = right-limit Stieltjes integral",
            brute == right,
            f"{_frac(brute)} vs {_frac(right)}",
        ),
        (
            "fast pair count = brute-force pair count",
            fast == brute,
            f"{_frac(fast)} vs {_frac(brute)}",
        ),
        (
            "area - pair probability = tie correction",
            auc - fast == tie.correction,
            f"{_frac(auc - fast)} vs {_frac(tie.correction)}",
        ),
        (
            "0 <= correction <= bound <= 1/2",
            0 <= tie.correction <= tie.bound <= Fraction(1, 2),
            f"correction {_frac(tie.correction)}, bound {_frac(tie.bound)}",
        ),
        (
            "no cross-class tie iff area = pair probability",
            hypothesis_holds(d) == (auc == fast),
            f"hypothesis {hypothesis_holds(d)}, auc {_frac(auc)}, pair {_frac(fast)}",
        ),
        (
            "invariance under increasing affine score map",
            auc_trapezoid(roc_curve(shift)) == auc
            and pair_probability_fast(shift) == fast
            and tie_report(shift).correction == tie.correction,
            "map x -> (7x - 3)/5",
        ),
    ]
    return results


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _cmd_report(args: argparse.Namespace) -> int:
    report = run_report(parse_input(_read(args.input), args.format))
    sys.stdout.write(emit_report(report, args.output))
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    d = parse_input(_read(args.input), args.format)
    svg = emit_curve_svg(roc_curve(d), args.width)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def _cmd_contlab(args: argparse.Namespace) -> int:
    try:
        model = LaplaceTieModel(args.epsilon)
        cert = jump_certificate(model, args.delta)
        area = area_consistency_check(model, args.samples, args.seed)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(f"epsilon          {args.epsilon:.17g}")
    print(f"beta_star        {model.beta_star:.17g}")
    print(f"fpr_below_jump   {cert.x_minus_approx:.17g}")
    print(f"fpr_above_jump   {cert.x_plus_approx:.17g}")
    print(f"area_quadrature  {area.area_quadrature:.17g}")
    print(f"pair_prob_mc     {area.pair_prob_mc:.17g}")
    print(f"gap              {area.gap:.17g}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    d = parse_input(_read(args.input), args.format)
    failures = 0
    for name, ok, detail in identity_suite(d):
        print(f"{'ok  ' if ok else 'FAIL'}  {name} ({detail})")
        failures += not ok
    if failures:
        print(f"{failures} identity check(s) failed", file=sys.stderr)
        return 3
    return 0


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="CSV/TSV file of score,label records")
    p.add_argument("--format", choices=["csv", "tsv"], default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactroc",
        description="Exact ROC/AUC and ranking-probability reports with tie accounting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="full exact report for a prediction file")
    _add_input_args(p_report)
    p_report.add_argument("--output", choices=["json", "text"], default="json")
    p_report.set_defaults(func=_cmd_report)

    p_curve = sub.add_parser("curve", help="render the ROC polyline as SVG")
    _add_input_args(p_curve)
    p_curve.add_argument("--svg", required=True, help="output SVG path")
    p_curve.add_argument("--width", type=int, default=480, help="canvas width in px (>= 64)")
    p_curve.set_defaults(func=_cmd_curve)

    p_cont = sub.add_parser(
        "contlab", help="continuous Laplace example: ROC jump certificate and area check"
    )
    p_cont.add_argument("--epsilon", type=float, default=0.25)
    p_cont.add_argument("--delta", type=float, default=1e-9)
    p_cont.add_argument("--samples", type=int, default=100_000)
    p_cont.add_argument("--seed", type=int, default=0)
    p_cont.set_defaults(func=_cmd_contlab)

    p_check = sub.add_parser("check", help="run every exact identity on a prediction file")
    _add_input_args(p_check)
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler: Callable[[argparse.Namespace], int] = args.func
    try:
        return handler(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except DegenerateClassesError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except IdentityError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 3
