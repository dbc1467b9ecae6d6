"""Step-function calculus for the rate functions.

A non-increasing, left-continuous step function is stored as its breakpoints
plus the value on each open interval between them, so one-sided limits are
exact table lookups (no epsilon probing). Differentiating such a function
(with a sign flip) yields a finite atomic measure, and integrating a step
function against an atomic measure is a finite sum. Which one-sided variant
of the integrand is used at the atoms - left, right, or balanced - is an
explicit parameter: the balanced variant reproduces the trapezoidal area,
the right variant reproduces the strict pair probability, and the two agree
whenever no atom sits on a jump of the integrand.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .core import Dataset, Rational, Score

LimitVariant = Literal["left", "right", "balanced"]


@dataclass(frozen=True)
class StepFunction:
    """Left-continuous, non-increasing piecewise-constant function.

    values[i] is the value on the open interval between breakpoints[i-1] and
    breakpoints[i] (values[0] to the left of everything, values[-1] to the
    right), and the stored value AT a breakpoint is the left interval's value.
    Breakpoints with no jump are dropped at construction, so every breakpoint
    carries a strictly positive downward jump.
    """

    breakpoints: tuple[Score, ...]
    values: tuple[Rational, ...]

    def __post_init__(self) -> None:
        if len(self.values) != len(self.breakpoints) + 1:
            raise ValueError("need exactly one value per interval")
        if any(a >= b for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("values must be non-increasing")
        # canonical form: drop breakpoints where nothing jumps
        keep = [i for i, (a, b) in enumerate(zip(self.values, self.values[1:])) if a != b]
        if len(keep) != len(self.breakpoints):
            object.__setattr__(
                self, "breakpoints", tuple(self.breakpoints[i] for i in keep)
            )
            object.__setattr__(
                self, "values", tuple(self.values[i] for i in keep) + (self.values[-1],)
            )

    def __call__(self, x: Score) -> Rational:
        """Stored (left-continuous) value at x."""
        return self.values[bisect_left(self.breakpoints, x)]

    def left_limit(self, x: Score) -> Rational:
        return self.values[bisect_left(self.breakpoints, x)]

    def right_limit(self, x: Score) -> Rational:
        return self.values[bisect_right(self.breakpoints, x)]

    def balanced(self, x: Score) -> Rational:
        """(left + right)/2; differs from the stored value only on jumps."""
        return (self.left_limit(x) + self.right_limit(x)) / 2


@dataclass(frozen=True)
class AtomicMeasure:
    """Finite positive measure: point masses at strictly increasing locations."""

    atoms: tuple[tuple[Score, Rational], ...]

    def __post_init__(self) -> None:
        locs = [a for a, _ in self.atoms]
        if any(x >= y for x, y in zip(locs, locs[1:])):
            raise ValueError("atom locations must be strictly increasing")
        if any(w <= 0 for _, w in self.atoms):
            raise ValueError("atom weights must be positive")

    @property
    def total_mass(self) -> Rational:
        return sum((w for _, w in self.atoms), Fraction(0))


def rate_step_function(d: Dataset, side: Literal["positive", "negative"]) -> StepFunction:
    """The map tau -> fraction of the chosen class with score >= tau.

    Breakpoints are exactly the scores attained by that class; the function
    is 1 left of all of them and 0 right of all of them, and agrees pointwise
    with tpr_at / fpr_at.
    """
    scores: Iterable[Score] = d.positives if side == "positive" else d.negatives
    counts: dict[Score, int] = {}
    for s in scores:
        counts[s] = counts.get(s, 0) + 1
    total = sum(counts.values())

    breakpoints = tuple(sorted(counts))
    values = [Fraction(1)]
    remaining = total
    for s in breakpoints:
        remaining -= counts[s]
        values.append(Fraction(remaining, total))
    return StepFunction(breakpoints=breakpoints, values=tuple(values))


def negative_differential(g: StepFunction) -> AtomicMeasure:
    """Atomic measure of -g: one atom per jump, weight = jump height.

    Total mass equals g's leftmost value minus its rightmost value (1 for a
    rate function).
    """
    atoms = tuple(
        (b, g.values[i] - g.values[i + 1]) for i, b in enumerate(g.breakpoints)
    )
    return AtomicMeasure(atoms=atoms)


def integrate(variant: LimitVariant, g: StepFunction, m: AtomicMeasure) -> Rational:
    """sum over atoms (a, w) of w * g_variant(a), exact."""
    pick = {
        "left": g.left_limit,
        "right": g.right_limit,
        "balanced": g.balanced,
    }[variant]
    return sum((w * pick(a) for a, w in m.atoms), Fraction(0))
