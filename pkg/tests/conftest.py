"""Shared reference values and dataset builders for the test suite."""
import json

import numpy as np
import pytest

# Reported statistics for the four benchmark networks:
# (network, criterion) -> (node count, total frequency, unpredictability H,
#                          mean mu, dispersion delta)
REFERENCE_EVENT_STATS = {
    ("A", "success"): (10, 100.0, 2.6610, 10.0, 3.757),
    ("B", "success"): (12, 100.0, 3.0501, 8.333, 2.732),
    ("C", "success"): (8, 60.0, 2.0871, 7.5, 3.5935),
    ("D", "success"): (9, 60.0, 1.4401, 6.6667, 4.62933),
    ("A", "fail"): (10, 25.0, 0.01, 2.5, 250.0),
    ("B", "fail"): (12, 25.0, 1.7552, 2.083, 1.186),
    ("C", "fail"): (8, 30.0, 2.1121, 3.75, 1.7754),
    ("D", "fail"): (9, 10.0, 0.7935, 1.1111, 1.4002),
}

# Reported expected-value scores per (network, criterion)
REFERENCE_SCORES = {
    ("A", "success"): 10.0045,
    ("B", "success"): 8.3387,
    ("C", "success"): 7.52409,
    ("D", "success"): 6.822,
    ("A", "fail"): 100.991,
    ("B", "fail"): 2.10188,
    ("C", "fail"): 3.7611,
    ("D", "fail"): 1.28134,
}

NETWORK_ORDER = ["A", "B", "C", "D"]
CRITERION_ORDER = ["success", "fail"]

REFERENCE_WEIGHTS = [0.6425, 0.3575]

REFERENCE_CLOSENESS = {"A": 0.0, "B": 0.942537, "C": 0.766967, "D": 1.0}


def reference_score_matrix() -> np.ndarray:
    return np.array([[REFERENCE_SCORES[(net, crit)] for crit in CRITERION_ORDER]
                     for net in NETWORK_ORDER])


def random_network(rng, n, min_out=2, lo=0.5, hi=3.0) -> np.ndarray:
    """A random valid frequency matrix: every node keeps at least min_out out-links.

    The default min_out=2 keeps the network well coupled; isolated mutual
    out-degree-1 pairs push the dissimilarity recentring negative (see the
    hermit-pair regression test) and are exercised separately.
    """
    f = np.zeros((n, n))
    for i in range(n):
        k = int(rng.integers(min_out, n))
        targets = rng.choice([j for j in range(n) if j != i], size=k, replace=False)
        f[i, targets] = rng.uniform(lo, hi, size=k)
    return f


def cycle_matrix(n, rate) -> np.ndarray:
    """Directed cycle with a constant per-edge frequency (vertex transitive)."""
    f = np.zeros((n, n))
    for i in range(n):
        f[i, (i + 1) % n] = rate
    return f


# Per-edge rates chosen so that, with densities uniform on the 8-cycles,
# the row-normalized score shares order the networks D > B > C > A under
# any benefit/cost weighting: D dominates everything, A is dominated,
# and B beats C on both criteria.
CYCLE_RATES = {"A": (5.0, 9.0), "B": (9.0, 2.0), "C": (6.0, 3.0), "D": (10.0, 1.0)}


def cycle_dataset_obj(n=8) -> dict:
    networks = []
    for name, (succ, fail) in CYCLE_RATES.items():
        networks.append({
            "name": name,
            "nodes": [f"{name.lower()}{i}" for i in range(n)],
            "events": {
                "success": cycle_matrix(n, succ).tolist(),
                "fail": cycle_matrix(n, fail).tolist(),
            },
        })
    return {
        "criteria": [
            {"name": "success", "direction": "benefit"},
            {"name": "fail", "direction": "cost"},
        ],
        "networks": networks,
    }


@pytest.fixture
def cycle_dataset_path(tmp_path):
    path = tmp_path / "networks.json"
    path.write_text(json.dumps(cycle_dataset_obj()), encoding="utf-8")
    return path


@pytest.fixture
def reference_weights_path(tmp_path):
    path = tmp_path / "weights.json"
    path.write_text(json.dumps({"weights": REFERENCE_WEIGHTS}), encoding="utf-8")
    return path
