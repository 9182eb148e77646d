"""Decision matrix assembly, entropy criterion weights, and TOPSIS ranking."""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .errors import ComputationError, DatasetError
from .events import EventDistribution
from .model import CriterionSpec


@dataclass
class DecisionMatrix:
    """m networks x n criteria of nonnegative scores."""

    alternatives: list[str]
    criteria: list[CriterionSpec]
    x: np.ndarray

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float)
        m, n = len(self.alternatives), len(self.criteria)
        if m < 2:
            raise ComputationError("ranking requires at least 2 networks")
        if n < 1:
            raise ComputationError("ranking requires at least 1 criterion")
        if self.x.shape != (m, n):
            raise ComputationError(
                f"decision matrix shape {self.x.shape} does not match "
                f"{m} alternatives x {n} criteria"
            )
        if (self.x < 0).any():
            raise ComputationError("decision matrix entries must be nonnegative")
        if (self.x.sum(axis=1) <= 0).any():
            i = int(np.flatnonzero(self.x.sum(axis=1) <= 0)[0])
            raise ComputationError(f"zero row for alternative '{self.alternatives[i]}'")


@dataclass(frozen=True)
class RankingResult:
    """Relative closeness per alternative, the induced order, and all intermediates."""

    alternatives: list[str]
    closeness: np.ndarray
    order: list[str]
    normalized: np.ndarray
    weighted: np.ndarray
    ideal: np.ndarray
    anti_ideal: np.ndarray
    d_plus: np.ndarray
    d_minus: np.ndarray


@dataclass(frozen=True)
class PipelineResult:
    """Everything rank_networks computes, for reports and inspection."""

    raw: DecisionMatrix
    normalized: DecisionMatrix
    weights: np.ndarray
    weight_source: str
    ranking: RankingResult


def row_normalize(dm: DecisionMatrix) -> DecisionMatrix:
    """Divide each row by its sum so scores become per-network ratios."""
    sums = dm.x.sum(axis=1)
    if (sums <= 0).any():
        i = int(np.flatnonzero(sums <= 0)[0])
        raise ComputationError(f"zero row for alternative '{dm.alternatives[i]}'")
    return replace(dm, x=dm.x / sums[:, None])


def entropy_weights(dm: DecisionMatrix) -> np.ndarray:
    """Objective criterion weights from column score dispersion.

    Columns are normalized to distributions; the divergence 1 - e_j of each
    column's normalized entropy becomes its weight share.  If every column
    is uniform the weights fall back to equal.
    """
    x = dm.x
    m = x.shape[0]
    col_sums = x.sum(axis=0)
    if (col_sums <= 0).any():
        j = int(np.flatnonzero(col_sums <= 0)[0])
        raise ComputationError(f"zero column for criterion '{dm.criteria[j].name}'")
    p = x / col_sums
    plogp = np.where(p > 0, p * np.log(np.where(p > 0, p, 1.0)), 0.0)
    e = -plogp.sum(axis=0) / np.log(m)
    d = 1.0 - e
    total = d.sum()
    if total < 1e-12:
        return np.full(x.shape[1], 1.0 / x.shape[1])
    return d / total


def _check_weights(w, n: int) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.shape != (n,):
        raise ComputationError(f"expected {n} weights, got {w.shape}")
    if (w < 0).any():
        raise ComputationError("weights must be nonnegative")
    if abs(w.sum() - 1.0) > 1e-9:
        raise ComputationError(f"weights must sum to 1 (got {w.sum()!r})")
    return w


def topsis(dm: DecisionMatrix, weights) -> RankingResult:
    """Rank by relative closeness to the ideal solution.

    Columns are scaled to unit Euclidean norm and weighted; the ideal point
    takes column maxima on benefit criteria and minima on cost criteria
    (anti-ideal the reverse); closeness is d-/(d+ + d-).  If an alternative
    is at zero distance from both poles it gets 0.5 by convention.
    """
    w = _check_weights(weights, len(dm.criteria))
    x = dm.x
    norms = np.sqrt((x * x).sum(axis=0))
    if (norms == 0).any():
        j = int(np.flatnonzero(norms == 0)[0])
        raise ComputationError(f"zero-norm column for criterion '{dm.criteria[j].name}'")
    normalized = x / norms
    weighted = normalized * w
    benefit = np.array([c.direction == "benefit" for c in dm.criteria])
    ideal = np.where(benefit, weighted.max(axis=0), weighted.min(axis=0))
    anti_ideal = np.where(benefit, weighted.min(axis=0), weighted.max(axis=0))
    d_plus = np.sqrt(((weighted - ideal) ** 2).sum(axis=1))
    d_minus = np.sqrt(((weighted - anti_ideal) ** 2).sum(axis=1))
    span = d_plus + d_minus
    closeness = np.where(span > 0, d_minus / np.where(span > 0, span, 1.0), 0.5)
    # stable sort keeps input order on ties
    order_idx = np.argsort(-closeness, kind="stable")
    return RankingResult(
        alternatives=list(dm.alternatives),
        closeness=closeness,
        order=[dm.alternatives[i] for i in order_idx],
        normalized=normalized,
        weighted=weighted,
        ideal=ideal,
        anti_ideal=anti_ideal,
        d_plus=d_plus,
        d_minus=d_minus,
    )


def decision_matrix_from_scores(scores: dict[str, dict[str, EventDistribution]],
                                criteria: list[CriterionSpec]) -> DecisionMatrix:
    """Collect EventDistribution.score values into an m x n matrix."""
    alternatives = list(scores)
    x = np.array([[scores[a][c.name].score for c in criteria] for a in alternatives])
    if not np.isfinite(x).all():
        raise ComputationError("non-finite score in decision matrix")
    return DecisionMatrix(alternatives=alternatives, criteria=criteria, x=x)


def rank_networks(scores: dict[str, dict[str, EventDistribution]],
                  criteria: list[CriterionSpec],
                  weights="entropy",
                  entropy_on_raw: bool = False) -> PipelineResult:
    """Full ranking stage: scores -> row-normalized matrix -> weights -> TOPSIS.

    weights is either the string 'entropy' or an explicit vector.  Entropy
    weighting runs on the row-normalized matrix unless entropy_on_raw is
    set (experimentation hook).
    """
    raw = decision_matrix_from_scores(scores, criteria)
    normalized = row_normalize(raw)
    if isinstance(weights, str):
        if weights != "entropy":
            raise ComputationError(f"unknown weight mode '{weights}'")
        w = entropy_weights(raw if entropy_on_raw else normalized)
        source = "entropy"
    else:
        w = _check_weights(weights, len(criteria))
        source = "user"
    ranking = topsis(normalized, w)
    return PipelineResult(raw=raw, normalized=normalized, weights=w,
                          weight_source=source, ranking=ranking)


def load_weights(path, n_criteria: int) -> np.ndarray:
    """Read a user weight file: {"weights": [...]}, sum within 1e-6 of 1.

    The vector is renormalized to sum exactly 1 after validation.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"weight file parse failure: {exc}") from None
    if not isinstance(obj, dict) or "weights" not in obj:
        raise DatasetError("weight file must be an object with a 'weights' list")
    try:
        w = np.asarray(obj["weights"], dtype=float)
    except (TypeError, ValueError):
        raise DatasetError("weight file entries must be numbers") from None
    if w.ndim != 1 or w.size != n_criteria:
        raise DatasetError(f"expected {n_criteria} weights, got {w.size}")
    if (w < 0).any():
        raise DatasetError("weights must be nonnegative")
    if abs(w.sum() - 1.0) > 1e-6:
        raise DatasetError(f"weights must sum to 1 within 1e-6 (got {w.sum()!r})")
    return w / w.sum()
