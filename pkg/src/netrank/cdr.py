"""Correlation Density Rank: node density distributions from event frequencies.

The chain is: popularity link weights -> cost matrix -> randomized-
shortest-path dissimilarities -> entropy-tuned kernel scales -> Gaussian
influence densities, normalized to a probability vector over nodes.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComputationError, InternalInvariantError
from .model import PipelineConfig

# 1/e_j blows up as a column's entropy approaches zero; at this scale the
# kernel term is exp(-tiny) ~ 1, which is the correct limit.
SIGMA_CAP = 1e12


@dataclass(frozen=True)
class LinkWeights:
    """Popularity weights per link, defined (nonzero) only where f_ij > 0."""

    w_in: np.ndarray
    w_out: np.ndarray


@dataclass(frozen=True)
class RspDissimilarity:
    """Symmetric dissimilarity matrix with the intermediates kept for diagnostics."""

    delta: np.ndarray
    w: np.ndarray
    z: np.ndarray
    s: np.ndarray
    c_tilde: np.ndarray


@dataclass(frozen=True)
class CdrOutput:
    """Normalized node densities plus the raw sums and per-column kernel data."""

    densities: np.ndarray
    raw: np.ndarray
    sigma: np.ndarray
    column_entropies: np.ndarray | None = None


def link_weights(f, epsilon: float) -> LinkWeights:
    """In/out popularity weights of each link.

    For node i with reference list R(i) = {p : f_ip > 0}:
      w_in[i,j]  = in_freq(j)  / sum of in_freq  over R(i)
      w_out[i,j] = out_freq(j) / sum of out_freq over R(i)
    Dead-end targets (no out-links) get w_out = epsilon; a singleton
    reference list gets epsilon added to both denominators so no weight
    can reach exactly 1 through the quotient.
    """
    f = np.asarray(f, dtype=float)
    n = f.shape[0]
    in_freq = f.sum(axis=0)
    out_freq = f.sum(axis=1)
    w_in = np.zeros_like(f)
    w_out = np.zeros_like(f)
    for i in range(n):
        refs = np.flatnonzero(f[i] > 0)
        if refs.size == 0:
            continue
        pad = epsilon if refs.size == 1 else 0.0
        in_den = in_freq[refs].sum() + pad
        out_den = out_freq[refs].sum() + pad
        for j in refs:
            w_in[i, j] = in_freq[j] / in_den
            w_out[i, j] = epsilon if out_freq[j] == 0 else out_freq[j] / out_den
    return LinkWeights(w_in=w_in, w_out=w_out)


def cost_matrix(f, lw: LinkWeights, gamma: float, c_max: float) -> np.ndarray:
    """Link costs: log of (1 - exp(-gamma f_ij)) in base (1 - w_in w_out).

    Links with zero frequency (and the diagonal) cost c_max.  Cost drops as
    frequency grows and as the endpoint gets more popular.
    """
    f = np.asarray(f, dtype=float)
    mask = f > 0
    product = lw.w_in * lw.w_out
    if (product[mask] >= 1).any():
        raise InternalInvariantError("link weight product >= 1 slipped past exception handling")
    c = np.full(f.shape, float(c_max))
    # log1p keeps both logs well away from 0 even for large gamma*f or
    # weight products very close to 1
    num = np.log1p(-np.exp(-gamma * f[mask]))
    den = np.log1p(-product[mask])
    c[mask] = num / den
    if not np.isfinite(c).all() or (c[mask] <= 0).any():
        raise ComputationError(
            f"cost saturated to zero or overflowed: gamma={gamma} too large for these frequencies"
        )
    return c


def transition_matrix(f) -> np.ndarray:
    """Row-normalized frequencies; rows without out-links stay all-zero (absorbing)."""
    f = np.asarray(f, dtype=float)
    p = np.zeros_like(f)
    out = f.sum(axis=1)
    rows = out > 0
    p[rows] = f[rows] / out[rows, None]
    return p


def rsp_dissimilarity(c, p, beta: float, epsilon: float) -> RspDissimilarity:
    """Randomized-shortest-path dissimilarities between all node pairs.

    W = P o exp(-beta C) must have norm < 1 so (I - W) is invertible in the
    Neumann sense; S holds expected path costs, and recentring by the
    diagonal followed by symmetrization yields the dissimilarity matrix
    (symmetric, zero diagonal, by construction).
    """
    c = np.asarray(c, dtype=float)
    p = np.asarray(p, dtype=float)
    n = c.shape[0]
    w = p * np.exp(-beta * c)
    norm = np.abs(w).sum(axis=1).max()
    if norm >= 1:
        raise ComputationError(
            f"beta too small / graph too dense: spectral radius >= 1 (beta={beta})"
        )
    eye = np.eye(n)
    z = np.linalg.inv(eye - w)
    # one Newton refinement step pushes the residual to machine precision,
    # which keeps the pipeline permutation-equivariant to ~1e-15
    z = z + z @ (eye - (eye - w) @ z)
    s = (z @ (c * w) @ z) / (z + epsilon)
    c_tilde = s - np.diag(s)[None, :]
    delta = 0.5 * (c_tilde + c_tilde.T)
    return RspDissimilarity(delta=delta, w=w, z=z, s=s, c_tilde=c_tilde)


def kernel_scales(delta) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Column-normalize the dissimilarities and derive per-node kernel scales.

    Each column of M is a probability distribution; its normalized entropy
    e_j (log base k, 0 ln 0 = 0) gives the kernel scale sigma_j = 1/e_j,
    capped at SIGMA_CAP for vanishing entropy.
    """
    delta = np.asarray(delta, dtype=float)
    k = delta.shape[0]
    col_sums = delta.sum(axis=0)
    if (col_sums <= 0).any():
        j = int(np.flatnonzero(col_sums <= 0)[0])
        raise InternalInvariantError(
            f"dissimilarity column {j + 1} has non-positive sum; "
            "cannot happen for valid inputs with N >= 2"
        )
    m = delta / col_sums
    plogp = np.where(m > 0, m * np.log(np.where(m > 0, m, 1.0)), 0.0)
    e = -plogp.sum(axis=0) / np.log(k)
    sigma = np.where(e < 1.0 / SIGMA_CAP, SIGMA_CAP, 1.0 / np.where(e > 0, e, 1.0))
    return m, e, sigma


def cdr(delta, sigma, column_entropies=None) -> CdrOutput:
    """Gaussian influence sums per node, normalized to a density vector.

    The j = i term contributes exp(0) = 1, so every raw value is >= 1 and
    every normalized density is strictly positive.
    """
    delta = np.asarray(delta, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    zscore = delta / sigma[None, :]
    raw = np.exp(-0.5 * zscore * zscore).sum(axis=1)
    return CdrOutput(
        densities=raw / raw.sum(),
        raw=raw,
        sigma=sigma,
        column_entropies=None if column_entropies is None else np.asarray(column_entropies),
    )


def compute_cdr(f, config: PipelineConfig) -> tuple[CdrOutput, RspDissimilarity]:
    """Run the full density pipeline for one frequency matrix."""
    lw = link_weights(f, config.epsilon)
    c = cost_matrix(f, lw, config.gamma, config.c_max)
    p = transition_matrix(f)
    rsp = rsp_dissimilarity(c, p, config.beta, config.epsilon)
    _, e, sigma = kernel_scales(rsp.delta)
    return cdr(rsp.delta, sigma, column_entropies=e), rsp
