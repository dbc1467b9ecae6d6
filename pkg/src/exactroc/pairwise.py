"""Exact pair probability and the tie accounting.

The pair probability is the chance that a uniformly random positive outranks
(strictly) a uniformly random negative. Ties are never half-counted here: the
gap between the trapezoidal area and this probability is exactly the half-sum
of cross-class tie mass products, and both that correction and its bound are
reported as first-class values.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import Dataset, Rational, Score


class SharedScore(NamedTuple):
    score: Score
    pos_mass: Rational  # conditional point mass of the score among positives
    neg_mass: Rational  # ... among negatives


@dataclass(frozen=True)
class TieReport:
    """Cross-class tie inventory with the exact area/probability gap.

    correction = (1/2) * sum over shared scores of pos_mass * neg_mass
    bound      = (1/4) * (b_given_p + b_given_n)

    where b_given_p / b_given_n are the conditional masses of the tied-score
    pre-image within each class. The chain 0 <= correction <= bound <= 1/2 is
    an arithmetic consequence (ab <= (a^2+b^2)/2 <= (a+b)/2 termwise) and is
    re-checked at construction.
    """

    shared_scores: tuple[SharedScore, ...]
    correction: Rational
    bound: Rational
    b_given_p: Rational
    b_given_n: Rational

    def __post_init__(self) -> None:
        if not 0 <= self.correction <= self.bound <= Fraction(1, 2):
            raise ValueError(
                f"tie inequality chain violated: correction={self.correction} "
                f"bound={self.bound}"
            )


def pair_probability_bruteforce(d: Dataset) -> Rational:
    """Count strictly concordant pairs by explicit double loop.

    Deliberately naive; this is the oracle the fast path is checked against.
    """
    wins = 0
    for p in d.positives:
        for q in d.negatives:
            if p > q:
                wins += 1
    return Fraction(wins, d.n_pos * d.n_neg)


def pair_probability_fast(d: Dataset) -> Rational:
    """Same value as the brute-force count in O(n log n).

    Sort the positive scores once; each negative then contributes the number
    of positives strictly above it, found by bisection. Ties contribute zero.
    """
    pos = sorted(d.positives)
    wins = sum(len(pos) - bisect_right(pos, q) for q in d.negatives)
    return Fraction(wins, d.n_pos * d.n_neg)


def hypothesis_holds(d: Dataset) -> bool:
    """True iff no score is attained by both classes."""
    return not (set(d.positives) & set(d.negatives))


def tie_report(d: Dataset) -> TieReport:
    pos_counts: dict[Score, int] = {}
    neg_counts: dict[Score, int] = {}
    for s in d.positives:
        pos_counts[s] = pos_counts.get(s, 0) + 1
    for s in d.negatives:
        neg_counts[s] = neg_counts.get(s, 0) + 1

    shared = []
    half_sum = Fraction(0)
    b_pos = 0
    b_neg = 0
    for s in sorted(set(pos_counts) & set(neg_counts)):
        pos_mass = Fraction(pos_counts[s], d.n_pos)
        neg_mass = Fraction(neg_counts[s], d.n_neg)
        shared.append(SharedScore(s, pos_mass, neg_mass))
        half_sum += pos_mass * neg_mass
        b_pos += pos_counts[s]
        b_neg += neg_counts[s]

    b_given_p = Fraction(b_pos, d.n_pos)
    b_given_n = Fraction(b_neg, d.n_neg)
    return TieReport(
        shared_scores=tuple(shared),
        correction=half_sum / 2,
        bound=(b_given_p + b_given_n) / 4,
        b_given_p=b_given_p,
        b_given_n=b_given_n,
    )
