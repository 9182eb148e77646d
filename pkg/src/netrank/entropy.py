"""Shannon and Rényi entropy of discrete distributions.

The Rényi value of a node-density vector is the network's unpredictability:
near-uniform density gives a large value, concentrated density a small one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ComputationError


@dataclass(frozen=True)
class Unpredictability:
    """Rényi entropy (base 2) of a density vector, with the order and size used."""

    value: float
    alpha: float
    n: int


def _as_distribution(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ComputationError("probability vector must be a non-empty 1-D array")
    if (p < 0).any():
        raise ComputationError("probabilities must be nonnegative")
    total = p.sum()
    if abs(total - 1.0) > 1e-9:
        raise ComputationError(f"probabilities must sum to 1 (got {total!r})")
    return p


def shannon(p, base: float = 2.0) -> float:
    """-sum p_i log_base p_i, with the 0 log 0 = 0 convention."""
    p = _as_distribution(p)
    if base <= 1:
        raise ComputationError(f"log base must exceed 1 (got {base})")
    pos = p[p > 0]
    return float(-(pos * np.log(pos)).sum() / math.log(base))


def renyi_unpredictability(cdr, alpha: float) -> Unpredictability:
    """Order-alpha Rényi entropy (base 2) of a density vector.

    The denominator sum is evaluated literally even though a normalized
    input makes it 1.
    """
    p = _as_distribution(cdr)
    if alpha <= 0:
        raise ComputationError(f"Rényi order must be positive (got {alpha})")
    if alpha == 1:
        raise ComputationError("Rényi order must differ from 1 (use shannon for the limit)")
    value = float(np.log2((p ** alpha).sum() / p.sum()) / (1.0 - alpha))
    return Unpredictability(value=value, alpha=float(alpha), n=int(p.size))
