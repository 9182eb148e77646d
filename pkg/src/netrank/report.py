"""Rank report assembly and fixed-precision serialization.

Reports are deterministic: numbers are rounded to 15 significant digits
before they enter the report, and the final TOPSIS pass runs on exactly
those rounded values, so re-running it on the report's own matrix and
weights reproduces the closeness vector bit for bit.  Run metadata lives
in a 'meta' sidecar field that determinism checks must exclude.
"""
from __future__ import annotations

import csv
import io
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .cdr import compute_cdr
from .entropy import renyi_unpredictability
from .errors import ComputationError, InternalInvariantError
from .events import EventDistribution, event_distribution
from .mcdm import DecisionMatrix, entropy_weights, row_normalize, topsis
from .model import CriterionSpec, NetworkDataset, PipelineConfig

SIG_DIGITS = 15

SCHEMA_VERSION = 1


def round_sig(value: float) -> float:
    """Round a float to the report precision (15 significant digits)."""
    return float(format(float(value), f".{SIG_DIGITS}g"))


def _round_array(a) -> np.ndarray:
    return np.vectorize(round_sig, otypes=[float])(np.asarray(a, dtype=float))


def fmt(value: float) -> str:
    return format(float(value), f".{SIG_DIGITS}g")


def _dump(value, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, item) in enumerate(value.items()):
            out.append(f'{pad}  "{key}": ')
            _dump(item, out, indent + 1)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, item in enumerate(value):
            out.append(pad + "  ")
            _dump(item, out, indent + 1)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        if not np.isfinite(value):
            raise InternalInvariantError(f"non-finite value in report: {value}")
        out.append(fmt(value))
    elif isinstance(value, str):
        out.append('"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif value is None:
        out.append("null")
    else:
        raise InternalInvariantError(f"unserializable report value: {value!r}")


def dumps(obj: dict) -> str:
    """Serialize a report deterministically, floats at 15 significant digits."""
    out: list[str] = []
    _dump(obj, out, 0)
    out.append("\n")
    return "".join(out)


def write_atomic(path, text: str) -> None:
    """Write via a temp file + rename so readers never see a partial report."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@dataclass(frozen=True)
class CdrDiagnostics:
    """Per-(network, criterion) intermediates for the optional dump."""

    nodes: list[str]
    delta: np.ndarray
    sigma: np.ndarray
    densities: np.ndarray


def score_events(datasets: list[NetworkDataset], criteria: list[CriterionSpec],
                 config: PipelineConfig) -> tuple[dict, dict]:
    """Run density + entropy + event model per (network, criterion).

    Returns (scores, diagnostics): scores maps network -> criterion ->
    EventDistribution, diagnostics keeps the dissimilarities, kernel scales
    and densities for dumping.
    """
    scores: dict[str, dict[str, EventDistribution]] = {}
    diagnostics: dict[tuple[str, str], CdrDiagnostics] = {}
    for ds in datasets:
        scores[ds.name] = {}
        for crit in criteria:
            f = ds.matrices[crit.name]
            out, rsp = compute_cdr(f, config)
            h = renyi_unpredictability(out.densities, config.alpha_renyi)
            scores[ds.name][crit.name] = event_distribution(f, h)
            diagnostics[(ds.name, crit.name)] = CdrDiagnostics(
                nodes=list(ds.nodes), delta=rsp.delta, sigma=out.sigma,
                densities=out.densities,
            )
    return scores, diagnostics


def build_report(datasets: list[NetworkDataset], criteria: list[CriterionSpec],
                 config: PipelineConfig, weights=None, weight_source: str = "entropy",
                 meta: dict | None = None) -> tuple[dict, dict]:
    """Assemble the full rank report.

    weights=None selects entropy weighting; an explicit vector is recorded
    as user-supplied.  The returned diagnostics dict carries the per-pair
    density intermediates for --dump-intermediates.
    """
    scores, diagnostics = score_events(datasets, criteria, config)
    names = [ds.name for ds in datasets]
    raw_x = _round_array(
        [[scores[name][c.name].score for c in criteria] for name in names]
    )
    raw = DecisionMatrix(alternatives=names, criteria=criteria, x=raw_x)
    normalized = row_normalize(raw)
    normalized.x = _round_array(normalized.x)
    if weights is None:
        w = entropy_weights(normalized)
        source = "entropy"
    else:
        w = np.asarray(weights, dtype=float)
        source = weight_source
    w = _round_array(w)
    ranking = topsis(normalized, w)

    events_block: dict = {}
    for name in names:
        events_block[name] = {}
        for c in criteria:
            dist = scores[name][c.name]
            events_block[name][c.name] = {
                "mu": round_sig(dist.mu),
                "unpredictability": round_sig(dist.h.value),
                "delta": round_sig(dist.delta),
                "p_zero": round_sig(dist.p_zero),
                "score": round_sig(dist.score),
            }
    report = {
        "schema": SCHEMA_VERSION,
        "config": {
            "gamma": round_sig(config.gamma),
            "beta": round_sig(config.beta),
            "epsilon": round_sig(config.epsilon),
            "alpha_renyi": round_sig(config.alpha_renyi),
            "c_max": round_sig(config.c_max),
            "weight_mode": config.weight_mode,
        },
        "criteria": [{"name": c.name, "direction": c.direction} for c in criteria],
        "networks": names,
        "events": events_block,
        "decision_matrix": {
            "raw": raw.x.tolist(),
            "row_normalized": normalized.x.tolist(),
        },
        "weights": {"values": w.tolist(), "source": source},
        "topsis": {
            "column_normalized": _round_array(ranking.normalized).tolist(),
            "weighted": _round_array(ranking.weighted).tolist(),
            "ideal": _round_array(ranking.ideal).tolist(),
            "anti_ideal": _round_array(ranking.anti_ideal).tolist(),
            "d_plus": _round_array(ranking.d_plus).tolist(),
            "d_minus": _round_array(ranking.d_minus).tolist(),
        },
        "closeness": _round_array(ranking.closeness).tolist(),
        "order": list(ranking.order),
    }
    if meta is not None:
        report["meta"] = dict(meta)
    return report, diagnostics


def strip_meta(report: dict) -> dict:
    """The report body: everything except the run-metadata sidecar."""
    return {k: v for k, v in report.items() if k != "meta"}


def cdr_table_csv(diag: CdrDiagnostics) -> str:
    """Diagnostic CSV: per node, its dissimilarity row, kernel scale and density."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["node"] + [f"delta_{label}" for label in diag.nodes] + ["sigma", "cdr"])
    for i, label in enumerate(diag.nodes):
        writer.writerow(
            [label]
            + [fmt(v) for v in diag.delta[i]]
            + [fmt(diag.sigma[i]), fmt(diag.densities[i])]
        )
    return buf.getvalue()


def curves_csv(rows) -> str:
    """Curve emission CSV: network,criterion,x,density."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["network", "criterion", "x", "density"])
    for network, criterion, x, density in rows:
        writer.writerow([network, criterion, fmt(x), fmt(density)])
    return buf.getvalue()
