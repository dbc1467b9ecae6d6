"""Continuous-score laboratory: a likelihood-ratio ROC with a genuine jump.

Negatives are standard Laplace; positives are uniform on (-eps, eps) with
matched exponential tails outside. The likelihood ratio is then 2*e^|t| on
the center and constant at beta_star = (1-2*eps)*e^eps on the tails, so the
tails form a tie region of positive mass: the false positive rate as a
function of the decision threshold jumps from 1 down to 1 - e^-eps at
beta_star even though both class distributions have densities. This is the
continuous analog of a cross-class score tie, and the area/pair-probability
gap it produces mirrors the discrete tie correction.

Everything here is floating point with explicit tolerances, in contrast to
the exact discrete modules: closed-form Laplace integrals where possible,
quadrature only inside the area consistency check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.integrate import quad


@dataclass(frozen=True)
class LaplaceTieModel:
    """Model parameter: half-width of the uniform center, in (0, 1/2)."""

    epsilon: float

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon < 0.5:
            raise ValueError(f"epsilon must lie in (0, 1/2), got {self.epsilon}")

    @property
    def beta_star(self) -> float:
        """Flat likelihood-ratio value on the tails; the ROC jump location."""
        return (1.0 - 2.0 * self.epsilon) * math.exp(self.epsilon)

    @property
    def beta_max(self) -> float:
        """Supremum of the likelihood ratio (approached at |t| -> eps)."""
        return 2.0 * math.exp(self.epsilon)


class JumpCertificate(NamedTuple):
    x_minus_approx: float
    x_plus_approx: float


class AreaConsistency(NamedTuple):
    area_quadrature: float
    pair_prob_mc: float
    gap: float


def likelihood_ratio(m: LaplaceTieModel, t: float) -> float:
    """Positive-to-negative density ratio at t."""
    if abs(t) < m.epsilon:
        return 2.0 * math.exp(abs(t))
    return m.beta_star


def fpr_of_threshold(m: LaplaceTieModel, beta: float) -> float:
    """Laplace mass of the strict acceptance region {likelihood ratio > beta}.

    The region is {|t| < eps, 2e^|t| > beta}, unioned with the whole tail
    {|t| >= eps} when beta < beta_star; each branch is a closed-form Laplace
    integral. Non-increasing in beta, 1 below beta_star, 0 at and above
    2e^eps.
    """
    if beta <= 0.0:
        raise ValueError("decision threshold must be positive")
    eps = m.epsilon
    if beta >= m.beta_max:
        return 0.0
    if beta >= 2.0:
        # center annulus ln(beta/2) < |t| < eps
        return 2.0 / beta - math.exp(-eps)
    if beta >= m.beta_star:
        # exactly the center: (1/2) * int_{-eps}^{eps} e^-|t| dt
        return 1.0 - math.exp(-eps)
    return 1.0


def tpr_of_threshold(m: LaplaceTieModel, beta: float) -> float:
    """Positive-class mass of {likelihood ratio > beta} (same conventions)."""
    if beta <= 0.0:
        raise ValueError("decision threshold must be positive")
    eps = m.epsilon
    if beta >= m.beta_max:
        return 0.0
    if beta >= 2.0:
        return 2.0 * (eps - math.log(beta / 2.0))
    if beta >= m.beta_star:
        return 2.0 * eps
    return 1.0


def jump_certificate(m: LaplaceTieModel, delta: float) -> JumpCertificate:
    """False positive rate just below and just above the jump threshold.

    The pair must bracket the discontinuity: ~1 below, ~1 - e^-eps above.
    delta has to be tiny relative to the gap between beta_star and 2 (the
    next feature of the curve) and smaller than beta_star itself.
    """
    limit = min(m.beta_star, (2.0 - m.beta_star) / 4.0)
    if not 0.0 < delta < limit:
        raise ValueError(f"delta must lie in (0, {limit}), got {delta}")
    return JumpCertificate(
        x_minus_approx=fpr_of_threshold(m, m.beta_star - delta),
        x_plus_approx=fpr_of_threshold(m, m.beta_star + delta),
    )


def _sample_positive(m: LaplaceTieModel, rng: np.random.Generator, n: int) -> np.ndarray:
    """Draw from the positive class: uniform center, exponential tails.

    Tail mass is 1 - 2*eps; conditionally on the tail, |t| - eps ~ Exp(1).
    """
    eps = m.epsilon
    out = np.empty(n)
    in_center = rng.random(n) < 2.0 * eps
    n_center = int(in_center.sum())
    out[in_center] = rng.uniform(-eps, eps, n_center)
    n_tail = n - n_center
    signs = rng.integers(0, 2, n_tail) * 2 - 1
    out[~in_center] = signs * (eps + rng.standard_exponential(n_tail))
    return out


def area_consistency_check(
    m: LaplaceTieModel, samples: int, seed: int
) -> AreaConsistency:
    """Area under the jumping ROC vs a Monte-Carlo pair probability.

    The area is the Stieltjes integral of the true positive rate against the
    decreasing false positive rate: quadrature over the smooth sweep segment
    (thresholds in [2, 2e^eps]) plus the jump atom at beta_star, where the
    integrand takes its balanced (midpoint) value. The pair probability uses
    the strict event {ratio(negative draw) < ratio(positive draw)}, so the
    tie region's mass is excluded and a strictly positive gap is expected,
    exactly as in the discrete tied case.

    Draws come from numpy's seeded PCG64 generator in a fixed order, so the
    Monte-Carlo value is reproducible bit-for-bit for a given seed.
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    eps = m.epsilon

    smooth, _ = quad(lambda b: tpr_of_threshold(m, b) * 2.0 / (b * b), 2.0, m.beta_max)
    # jump atom: balanced tpr times the fpr drop 1 - (1 - e^-eps)
    jump = 0.5 * (1.0 + 2.0 * eps) * math.exp(-eps)
    area = smooth + jump

    rng = np.random.default_rng(seed)
    r = _sample_positive(m, rng, samples)
    s = rng.laplace(0.0, 1.0, samples)
    flat = m.beta_star
    g_r = np.where(np.abs(r) < eps, 2.0 * np.exp(np.abs(r)), flat)
    g_s = np.where(np.abs(s) < eps, 2.0 * np.exp(np.abs(s)), flat)
    pair = float(np.mean(g_s < g_r))

    return AreaConsistency(area_quadrature=area, pair_prob_mc=pair, gap=area - pair)
