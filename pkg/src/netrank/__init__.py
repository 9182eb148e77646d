"""netrank: rank alternative complex networks by event-frequency performance.

Per criterion, each network's event-frequency matrix becomes a node density
distribution (Correlation Density Rank); the Rényi entropy of that
distribution measures diversity of density; a truncated-Gaussian event
model turns totals and diversity into expected-value scores; and TOPSIS
with entropy (or user) criterion weights produces the final ordering.
"""

__version__ = "0.1.0"

from .cdr import (CdrOutput, LinkWeights, RspDissimilarity, cdr, compute_cdr,
                  cost_matrix, kernel_scales, link_weights, rsp_dissimilarity,
                  transition_matrix)
from .entropy import Unpredictability, renyi_unpredictability, shannon
from .errors import (ComputationError, ConfigError, DatasetError,
                     InternalInvariantError, NetrankError)
from .events import (EventDistribution, curve_points, event_distribution,
                     expected_score, gaussian_params, pdf, prob_zero)
from .mcdm import (DecisionMatrix, PipelineResult, RankingResult,
                   entropy_weights, load_weights, rank_networks,
                   row_normalize, topsis)
from .model import (CriterionSpec, NetworkDataset, PipelineConfig,
                    load_dataset, save_dataset, validate_config)
from .report import build_report, score_events

__all__ = [
    "CdrOutput", "LinkWeights", "RspDissimilarity", "cdr", "compute_cdr",
    "cost_matrix", "kernel_scales", "link_weights", "rsp_dissimilarity",
    "transition_matrix",
    "Unpredictability", "renyi_unpredictability", "shannon",
    "ComputationError", "ConfigError", "DatasetError",
    "InternalInvariantError", "NetrankError",
    "EventDistribution", "curve_points", "event_distribution",
    "expected_score", "gaussian_params", "pdf", "prob_zero",
    "DecisionMatrix", "PipelineResult", "RankingResult", "entropy_weights",
    "load_weights", "rank_networks", "row_normalize", "topsis",
    "CriterionSpec", "NetworkDataset", "PipelineConfig", "load_dataset",
    "save_dataset", "validate_config",
    "build_report", "score_events",
    "__version__",
]
