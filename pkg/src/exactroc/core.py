"""Exact arithmetic and the dataset model.

Every quantity downstream (rates, areas, pair probabilities, tie terms) is a
ratio of integer counts, so everything is carried as `fractions.Fraction`.
Scores enter as decimal text and are converted to exact rationals; binary
floating point is deliberately kept out of the data path because ties are
decided by exact score equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

# Exact reduced fraction with positive denominator; equality is decidable.
Rational = Fraction

# Classifier output. Only the total order on scores matters; values are not
# restricted to [0, 1].
Score = Fraction


class DegenerateClassesError(ValueError):
    """The observations do not contain both a positive and a negative."""


def rational(num: int, den: int = 1) -> Rational:
    """Reduced rational num/den with the sign carried by the numerator.

    Raises ZeroDivisionError for den == 0.
    """
    return Fraction(num, den)


def score(value: Score | int | str) -> Score:
    """Convert decimal text (or an exact number) to an exact score.

    Accepts Fraction, int, or strings such as "0.35", "-2", "1e-3", "7/20".
    Floats are rejected: a float has already been rounded to binary and can
    silently create or destroy ties.
    """
    if isinstance(value, float):
        raise TypeError(
            "float scores are not accepted; pass the decimal text instead "
            f"(e.g. {value!r:.17} as a string)"
        )
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(str(value))


@dataclass(frozen=True)
class Dataset:
    """Finite observation set: scores plus positive/negative labels.

    Duplicate observations are allowed and counted with multiplicity (the
    underlying measure is counting measure). Both classes must be non-empty.
    """

    observations: tuple[tuple[Score, bool], ...]

    def __post_init__(self) -> None:
        if not any(pos for _, pos in self.observations):
            raise DegenerateClassesError("dataset has no positive observation")
        if all(pos for _, pos in self.observations):
            raise DegenerateClassesError("dataset has no negative observation")

    @cached_property
    def positives(self) -> tuple[Score, ...]:
        return tuple(s for s, pos in self.observations if pos)

    @cached_property
    def negatives(self) -> tuple[Score, ...]:
        return tuple(s for s, pos in self.observations if not pos)

    @property
    def n_pos(self) -> int:
        return len(self.positives)

    @property
    def n_neg(self) -> int:
        return len(self.negatives)

    def __len__(self) -> int:
        return len(self.observations)

    @cached_property
    def distinct_scores(self) -> tuple[Score, ...]:
        """All attained scores, deduplicated, ascending."""
        return tuple(sorted({s for s, _ in self.observations}))


def dataset_from_pairs(pairs: Iterable[tuple[Score | int | str, bool]]) -> Dataset:
    """Build a Dataset from (score, is_positive) pairs.

    Scores go through `score()` (exact text or exact numbers only). Raises
    DegenerateClassesError unless both classes are represented.
    """
    obs = tuple((score(s), bool(pos)) for s, pos in pairs)
    if not obs:
        raise DegenerateClassesError("dataset is empty")
    return Dataset(obs)


def dataset_from_classes(
    positives: Iterable[Score | int | str], negatives: Iterable[Score | int | str]
) -> Dataset:
    """Convenience constructor from two score collections."""
    pairs = [(s, True) for s in positives] + [(s, False) for s in negatives]
    return dataset_from_pairs(pairs)


def class_measures(d: Dataset) -> tuple[Rational, Rational]:
    """(|P|/|Omega|, |P^c|/|Omega|) under the uniform measure; sums to 1."""
    n = len(d)
    return Fraction(d.n_pos, n), Fraction(d.n_neg, n)
