"""Minimum k-ruling sets via graph powers and dominating sets, and
(alpha, alpha-1) ruling sets via graph powers and maximal independent sets."""

from rulingset.domination import (
    DominationResult,
    SizeLimitError,
    greedy_dominating_set,
    is_dominating,
    min_dominating_set,
)
from rulingset.graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    bfs_within,
    build_graph,
    closed_neighborhood,
    distance,
)
from rulingset.independence import MisResult, greedy_mis, is_maximal_independent, luby_mis
from rulingset.power import GraphDelta, PowerMode, expand_round, power_graph, ruled_neighborhoods
from rulingset.ruling import (
    AlphaBeta,
    PlainK,
    RulingReport,
    alpha_ruling_set,
    brute_force_min_k_ruling,
    find_beta_mismatch_witness,
    min_k_ruling_set,
    verify_alpha_beta,
    verify_k_ruling,
)

__version__ = "0.1.0"
