"""Dataset schema, ingestion and validation.

A dataset couples a named, ordered node set with one nonnegative
event-frequency matrix per criterion.  Everything downstream assumes the
invariants enforced here: square matrices, zero diagonal, no negative
entries, at least one positive entry, and a shared node ordering taken
from the file's declaration order.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigError, DatasetError

DIRECTIONS = ("benefit", "cost")

CSV_HEADER = ["network", "criterion", "src", "dst", "count"]


@dataclass(frozen=True)
class CriterionSpec:
    """An event type scored per network, tagged benefit (more is better) or cost."""

    name: str
    direction: str

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise DatasetError(
                f"criterion '{self.name}': direction must be 'benefit' or 'cost', "
                f"got '{self.direction}'"
            )


@dataclass
class NetworkDataset:
    """One alternative network: ordered node labels plus one frequency matrix per criterion."""

    name: str
    nodes: list[str]
    matrices: dict[str, np.ndarray]

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class PipelineConfig:
    """User-tunable parameters for the scoring pipeline.

    gamma scales how strongly event frequency lowers link cost, beta is the
    cost influence on the random walker, epsilon handles the weight/division
    exceptions, c_max stands in for an infinite cost, and alpha_renyi is the
    entropy order used for the diversity-of-density measure.
    """

    gamma: float = 1.0
    beta: float = 1.0
    epsilon: float = 1e-6
    c_max: float = 1e6
    alpha_renyi: float = 3.0
    weight_mode: str = "entropy"


def validate_config(cfg: PipelineConfig | None = None) -> PipelineConfig:
    """Check parameter bounds; a missing config yields the defaults."""
    if cfg is None:
        cfg = PipelineConfig()
    if not cfg.gamma > 0:
        raise ConfigError(f"gamma must be positive (got {cfg.gamma})")
    if not cfg.beta > 0:
        raise ConfigError(f"beta must be positive (got {cfg.beta})")
    if not cfg.epsilon > 0:
        raise ConfigError(f"epsilon must be positive (got {cfg.epsilon})")
    if cfg.epsilon >= 1:
        raise ConfigError(
            f"epsilon must be a very small number less than 1 (got {cfg.epsilon})"
        )
    if not cfg.c_max > 0:
        raise ConfigError(f"c_max must be positive (got {cfg.c_max})")
    if not cfg.alpha_renyi > 0:
        raise ConfigError(f"Rényi order must be positive (got {cfg.alpha_renyi})")
    if cfg.alpha_renyi == 1:
        raise ConfigError("Rényi order must differ from 1")
    if cfg.weight_mode not in ("entropy", "user"):
        raise ConfigError(
            f"weight_mode must be 'entropy' or 'user' (got '{cfg.weight_mode}')"
        )
    return cfg


def validate_frequency_matrix(matrix, network: str, criterion: str, n_nodes: int) -> np.ndarray:
    """Coerce one frequency matrix to float64 and enforce its invariants.

    Errors name the network, the criterion, and the offending cell in
    1-based coordinates so they can be traced back to the input file.
    """
    try:
        f = np.asarray(matrix, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DatasetError(
            f"non-numeric frequency entry at ({network}, {criterion}): {exc}"
        ) from None
    if f.ndim != 2 or f.shape[0] != f.shape[1] or f.shape[0] != n_nodes:
        raise DatasetError(
            f"matrix shape mismatch at ({network}, {criterion}): "
            f"expected {n_nodes}x{n_nodes}, got {'x'.join(map(str, f.shape))}"
        )
    if not np.isfinite(f).all():
        i, j = np.argwhere(~np.isfinite(f))[0]
        raise DatasetError(
            f"non-finite entry at ({network}, {criterion}, cell ({i + 1},{j + 1}))"
        )
    if (f < 0).any():
        i, j = np.argwhere(f < 0)[0]
        raise DatasetError(
            f"negative entry at ({network}, {criterion}, cell ({i + 1},{j + 1}))"
        )
    diag = np.diagonal(f)
    if (diag != 0).any():
        i = int(np.flatnonzero(diag != 0)[0])
        raise DatasetError(f"nonzero diagonal at ({network}, {criterion}, node {i + 1})")
    if not (f > 0).any():
        raise DatasetError(f"no positive entries at ({network}, {criterion})")
    return f


def validate_dataset(ds: NetworkDataset, criteria: list[CriterionSpec]) -> NetworkDataset:
    """Enforce the structural invariants tying nodes, criteria and matrices together."""
    if len(ds.nodes) < 2:
        raise DatasetError(f"network {ds.name}: at least 2 nodes required")
    seen = set()
    for label in ds.nodes:
        if label in seen:
            raise DatasetError(f"duplicate node label '{label}' in network {ds.name}")
        seen.add(label)
    wanted = {c.name for c in criteria}
    for name in ds.matrices:
        if name not in wanted:
            raise DatasetError(
                f"criterion/matrix mismatch at network {ds.name}: unknown criterion '{name}'"
            )
    for c in criteria:
        if c.name not in ds.matrices:
            raise DatasetError(
                f"criterion/matrix mismatch at network {ds.name}: missing matrix for '{c.name}'"
            )
        ds.matrices[c.name] = validate_frequency_matrix(
            ds.matrices[c.name], ds.name, c.name, len(ds.nodes)
        )
    return ds


def _criteria_from_json(raw) -> list[CriterionSpec]:
    if not isinstance(raw, list) or not raw:
        raise DatasetError("'criteria' must be a non-empty list")
    criteria = []
    names = set()
    for entry in raw:
        if not isinstance(entry, dict) or "name" not in entry or "direction" not in entry:
            raise DatasetError("each criterion needs 'name' and 'direction' fields")
        name = entry["name"]
        if not isinstance(name, str) or not name:
            raise DatasetError("criterion names must be non-empty strings")
        if name in names:
            raise DatasetError(f"duplicate criterion name '{name}'")
        names.add(name)
        criteria.append(CriterionSpec(name=name, direction=entry["direction"]))
    return criteria


def datasets_from_json(obj) -> tuple[list[NetworkDataset], list[CriterionSpec]]:
    """Build validated datasets from the authoritative JSON structure."""
    if not isinstance(obj, dict):
        raise DatasetError("top-level JSON value must be an object")
    criteria = _criteria_from_json(obj.get("criteria"))
    raw_networks = obj.get("networks")
    if not isinstance(raw_networks, list) or not raw_networks:
        raise DatasetError("'networks' must be a non-empty list")
    datasets = []
    names = set()
    for entry in raw_networks:
        if not isinstance(entry, dict):
            raise DatasetError("each network must be an object")
        name = entry.get("name")
        if not isinstance(name, str) or not name:
            raise DatasetError("network names must be non-empty strings")
        if name in names:
            raise DatasetError(f"duplicate network name '{name}'")
        names.add(name)
        nodes = entry.get("nodes")
        if not isinstance(nodes, list) or not all(isinstance(x, str) for x in nodes):
            raise DatasetError(f"network {name}: 'nodes' must be a list of strings")
        events = entry.get("events")
        if not isinstance(events, dict):
            raise DatasetError(f"network {name}: 'events' must map criterion names to matrices")
        ds = NetworkDataset(name=name, nodes=list(nodes), matrices=dict(events))
        datasets.append(validate_dataset(ds, criteria))
    return datasets, criteria


def datasets_to_json(datasets: list[NetworkDataset], criteria: list[CriterionSpec]) -> dict:
    return {
        "criteria": [{"name": c.name, "direction": c.direction} for c in criteria],
        "networks": [
            {
                "name": ds.name,
                "nodes": list(ds.nodes),
                "events": {c.name: ds.matrices[c.name].tolist() for c in criteria},
            }
            for ds in datasets
        ],
    }


def datasets_from_csv(text: str) -> tuple[list[NetworkDataset], list[CriterionSpec]]:
    """Read the edge-list alternative: network,criterion,src,dst,count.

    Pairs absent from the file are zero.  Node order is first-appearance
    order within each network (src before dst), criterion and network order
    is first appearance in the file.  Edge lists carry no direction info,
    so every criterion loads as 'benefit'.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise DatasetError("parse failure: empty CSV input") from None
    if [h.strip() for h in header] != CSV_HEADER:
        raise DatasetError(
            f"parse failure: expected header {','.join(CSV_HEADER)}, got {','.join(header)}"
        )
    crit_order: list[str] = []
    net_order: list[str] = []
    node_order: dict[str, list[str]] = {}
    counts: dict[str, dict[str, dict[tuple[str, str], float]]] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 5:
            raise DatasetError(f"parse failure: line {lineno}: expected 5 fields, got {len(row)}")
        net, crit, src, dst, raw_count = (cell.strip() for cell in row)
        try:
            count = float(raw_count)
        except ValueError:
            raise DatasetError(
                f"parse failure: line {lineno}: count '{raw_count}' is not a number"
            ) from None
        if count < 0:
            raise DatasetError(f"negative entry at ({net}, {crit}, {src}->{dst})")
        if net not in node_order:
            net_order.append(net)
            node_order[net] = []
            counts[net] = {}
        if crit not in crit_order:
            crit_order.append(crit)
        for label in (src, dst):
            if label not in node_order[net]:
                node_order[net].append(label)
        if src == dst:
            if count != 0:
                raise DatasetError(f"nonzero diagonal at ({net}, {crit}, node {src})")
            continue
        # repeated edges accumulate, as in an event log
        counts[net].setdefault(crit, {})
        counts[net][crit][(src, dst)] = counts[net][crit].get((src, dst), 0.0) + count
    criteria = [CriterionSpec(name=c, direction="benefit") for c in crit_order]
    if not criteria:
        raise DatasetError("parse failure: CSV contains no data rows")
    datasets = []
    for net in net_order:
        nodes = node_order[net]
        index = {label: i for i, label in enumerate(nodes)}
        matrices = {}
        for crit in crit_order:
            f = np.zeros((len(nodes), len(nodes)))
            for (src, dst), count in counts[net].get(crit, {}).items():
                f[index[src], index[dst]] = count
            matrices[crit] = f
        ds = NetworkDataset(name=net, nodes=list(nodes), matrices=matrices)
        datasets.append(validate_dataset(ds, criteria))
    return datasets, criteria


def datasets_to_csv(datasets: list[NetworkDataset], criteria: list[CriterionSpec]) -> str:
    """Emit the edge-list form.

    The first criterion's consecutive-pair entries are always written (zeros
    included) so node declaration order survives a round trip even for nodes
    without out-edges.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for ds in datasets:
        nodes = ds.nodes
        for ci, c in enumerate(criteria):
            f = ds.matrices[c.name]
            pinned = set()
            if ci == 0:
                for t in range(len(nodes) - 1):
                    writer.writerow([ds.name, c.name, nodes[t], nodes[t + 1], repr(f[t, t + 1])])
                    pinned.add((t, t + 1))
            for i in range(len(nodes)):
                for j in range(len(nodes)):
                    if f[i, j] > 0 and (i, j) not in pinned:
                        writer.writerow([ds.name, c.name, nodes[i], nodes[j], repr(f[i, j])])
    return buf.getvalue()


def _infer_format(path: Path, format: str | None) -> str:
    if format is not None:
        if format not in ("json", "csv"):
            raise DatasetError(f"unknown format '{format}' (expected 'json' or 'csv')")
        return format
    return "csv" if path.suffix.lower() == ".csv" else "json"


def load_dataset(path, format: str | None = None) -> tuple[list[NetworkDataset], list[CriterionSpec]]:
    """Load and validate datasets from a JSON or CSV file.

    The format defaults to the file extension ('.csv' means csv, anything
    else json).  Every matrix in the result satisfies the frequency-matrix
    invariants; malformed input raises DatasetError naming the spot.
    """
    path = Path(path)
    fmt = _infer_format(path, format)
    text = path.read_text(encoding="utf-8")
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DatasetError(f"parse failure: {exc}") from None
        return datasets_from_json(obj)
    return datasets_from_csv(text)


def save_dataset(path, datasets: list[NetworkDataset], criteria: list[CriterionSpec],
                 format: str | None = None) -> None:
    """Serialize datasets so that loading the file again round-trips exactly."""
    path = Path(path)
    fmt = _infer_format(path, format)
    if fmt == "json":
        path.write_text(json.dumps(datasets_to_json(datasets, criteria), indent=2) + "\n",
                        encoding="utf-8")
    else:
        path.write_text(datasets_to_csv(datasets, criteria), encoding="utf-8")
