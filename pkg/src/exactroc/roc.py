"""Rate functions, the finite ROC point set, and the trapezoidal area.

A threshold tau accepts every observation with score >= tau. The true and
false positive rates are therefore non-increasing, left-continuous step
functions of tau, and the ROC sweep visits only finitely many points: one per
distinct observed score, plus (0, 0) from a sentinel above the maximum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import Dataset, Rational, Score


class RocPoint(NamedTuple):
    fpr: Rational
    tpr: Rational


@dataclass(frozen=True)
class RocCurve:
    """Distinct ROC points in sweep order, (1,1) first, (0,0) last.

    `thresholds` is the evaluation grid that produced the points: the
    distinct observed scores ascending, then one sentinel strictly above the
    maximum. Points are deduplicated, so len(points) <= len(thresholds).
    """

    points: tuple[RocPoint, ...]
    thresholds: tuple[Score, ...]

    def __post_init__(self) -> None:
        pts = self.points
        if pts[0] != (1, 1) or pts[-1] != (0, 0):
            raise ValueError("curve must run from (1,1) to (0,0)")
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise ValueError("consecutive curve points must be distinct")
            if b.fpr > a.fpr or b.tpr > a.tpr:
                raise ValueError("rates must be non-increasing along the sweep")
        if any(not (0 <= p.fpr <= 1 and 0 <= p.tpr <= 1) for p in pts):
            raise ValueError("rates must lie in [0,1]")


def tpr_at(d: Dataset, tau: Score) -> Rational:
    """Fraction of positives with score >= tau (left-closed acceptance)."""
    return Fraction(sum(1 for s in d.positives if s >= tau), d.n_pos)


def fpr_at(d: Dataset, tau: Score) -> Rational:
    """Fraction of negatives with score >= tau."""
    return Fraction(sum(1 for s in d.negatives if s >= tau), d.n_neg)


def roc_curve(d: Dataset) -> RocCurve:
    """Sweep thresholds over the distinct scores plus a sentinel.

    Evaluating at the minimum score gives (1,1); the sentinel gives (0,0).
    Consecutive duplicate points are merged, so `points` is exactly the set
    of values the rate pair takes over all real thresholds, in sweep order.
    """
    distinct = d.distinct_scores
    thresholds = distinct + (distinct[-1] + 1,)

    # Single descending pass: at threshold distinct[i] the accepted set is
    # everything with score >= distinct[i], so suffix counts suffice.
    pos_at = {s: 0 for s in distinct}
    neg_at = {s: 0 for s in distinct}
    for s in d.positives:
        pos_at[s] += 1
    for s in d.negatives:
        neg_at[s] += 1

    points: list[RocPoint] = []
    pos_ge = d.n_pos
    neg_ge = d.n_neg
    for s in distinct:
        pt = RocPoint(Fraction(neg_ge, d.n_neg), Fraction(pos_ge, d.n_pos))
        if not points or points[-1] != pt:
            points.append(pt)
        pos_ge -= pos_at[s]
        neg_ge -= neg_at[s]
    sentinel_pt = RocPoint(Fraction(0), Fraction(0))
    if points[-1] != sentinel_pt:
        points.append(sentinel_pt)
    return RocCurve(points=tuple(points), thresholds=thresholds)


def auc_trapezoid(c: RocCurve) -> Rational:
    """Trapezoid sum sum_k (T_k + T_{k+1})/2 * (F_k - F_{k+1}), exact."""
    twice = Fraction(0)
    for a, b in zip(c.points, c.points[1:]):
        twice += (a.tpr + b.tpr) * (a.fpr - b.fpr)
    return twice / 2
