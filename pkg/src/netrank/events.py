"""Gaussian event model per (network, criterion).

Total event frequency and the unpredictability of the node densities turn
into a Gaussian with mean mu = total/N and scale delta = mu/H.  Scores are
expected values of that Gaussian restricted to the half line x >= 0; the
density is deliberately NOT renormalized over [0, inf).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import Unpredictability
from .errors import ComputationError

SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class EventDistribution:
    """Event model for one network under one criterion."""

    mu: float
    h: Unpredictability
    delta: float
    p_zero: float
    score: float


def gaussian_params(f, h: Unpredictability) -> tuple[float, float]:
    """Mean events per node and dispersion mu/H for one frequency matrix."""
    if h.value <= 0:
        raise ComputationError("degenerate density concentration: dispersion undefined")
    f = np.asarray(f, dtype=float)
    mu = float(f.sum() / f.shape[0])
    return mu, mu / h.value


def _check_delta(delta: float) -> None:
    if not delta > 0:
        raise ComputationError(f"dispersion must be positive (got {delta})")


def pdf(x, mu: float, delta: float):
    """Gaussian density at x; array in, array out."""
    _check_delta(delta)
    z = (np.asarray(x, dtype=float) - mu) / delta
    d = np.exp(-0.5 * z * z) / (delta * SQRT_TWO_PI)
    return d if d.ndim else float(d)


def prob_zero(mu: float, delta: float) -> float:
    """Density at x = 0: the chance the event never hits a random node."""
    return pdf(0.0, mu, delta)


def _norm_cdf(z: float) -> float:
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


def expected_score(mu: float, delta: float) -> float:
    """Closed form of the half-line expected value integral.

    int_0^inf x F(x) dx = mu*Phi(mu/delta) + delta*phi(mu/delta) with Phi,
    phi the standard normal CDF/PDF.
    """
    _check_delta(delta)
    z = mu / delta
    return mu * _norm_cdf(z) + delta * math.exp(-0.5 * z * z) / SQRT_TWO_PI


def event_distribution(f, h: Unpredictability) -> EventDistribution:
    """Assemble the full event model from a frequency matrix and its unpredictability."""
    mu, delta = gaussian_params(f, h)
    return EventDistribution(
        mu=mu,
        h=h,
        delta=delta,
        p_zero=prob_zero(mu, delta),
        score=expected_score(mu, delta),
    )


def curve_points(mu: float, delta: float, samples: int) -> tuple[np.ndarray, np.ndarray]:
    """Sample the density on [0, mu + 4*delta] for curve emission."""
    _check_delta(delta)
    if samples < 1:
        raise ComputationError(f"samples must be a positive integer (got {samples})")
    x = np.linspace(0.0, mu + 4.0 * delta, samples)
    return x, pdf(x, mu, delta)
