"""domcount: exact and probabilistic counting of dominating vertex sets."""

from .engine import (
    DominationCount,
    FractionEstimate,
    WorkBudgetExceeded,
    count_dominating_exact,
    domination_number,
    estimate_dominating_fraction,
    row_zero_lower_bound,
)
from .generate import (
    EnsembleParams,
    ensemble_epsilon,
    epsilon_schedule,
    erdos_renyi,
    gamma3_extremal,
    markov_epsilon_threshold,
)
from .graph import (
    Graph,
    RowZeroProfile,
    VertexSet,
    build_graph,
    closed_neighborhood,
    is_dominating,
    parse_edge_list,
    read_graph,
    row_zero_profile,
    to_edge_list,
    write_graph,
)

__all__ = [
    "DominationCount",
    "EnsembleParams",
    "FractionEstimate",
    "Graph",
    "RowZeroProfile",
    "VertexSet",
    "WorkBudgetExceeded",
    "build_graph",
    "closed_neighborhood",
    "count_dominating_exact",
    "domination_number",
    "ensemble_epsilon",
    "epsilon_schedule",
    "erdos_renyi",
    "estimate_dominating_fraction",
    "gamma3_extremal",
    "is_dominating",
    "markov_epsilon_threshold",
    "parse_edge_list",
    "read_graph",
    "row_zero_lower_bound",
    "row_zero_profile",
    "to_edge_list",
    "write_graph",
]

__version__ = "0.1.0"
