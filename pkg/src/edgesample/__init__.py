"""Almost-uniform edge sampling behind a metered graph-query oracle.

Modules
-------
graph       : immutable adjacency-list graphs, degree partition, edge-list I/O
generators  : deterministic test-graph generators and the ``kind:args`` grammar
oracle      : the four metered query types with per-type counters
estimate    : pluggable directed-edge-count estimators with median boosting
sampler     : the light/heavy mixture sampler, fallback, and derived samplers
analytic    : exact per-edge attempt distributions and closeness diagnostics
experiments : query-cost scaling runs and hidden-clique budget experiments
cli         : ``edgesample`` command-line front end
"""

from .analytic import (
    AttemptDistribution,
    ClosenessReport,
    attempt_distribution,
    conditional_closeness,
    empirical_distribution,
    enumerate_attempt_distribution,
    verify_attempt_bounds,
    vertex_return_distribution,
)
from .estimate import EdgeEstimate, estimate_edges, estimate_edges_amplified
from .graph import (
    DegreePartition,
    DirectedEdge,
    Graph,
    GraphConstructionError,
    RelabeledView,
    build_graph,
    light_degree,
    partition,
    read_edge_list,
    write_edge_list,
)
from .oracle import BudgetExceeded, QueryCounts, QueryOracle
from .sampler import (
    SampleReport,
    SamplerConfig,
    fallback_uniform_edge,
    mixture_attempt,
    sample_degree_proportional_vertex,
    sample_edge_almost_uniformly,
    sample_heavy_edge,
    sample_light_edge,
    sample_undirected_edge,
    weighted_expectation,
)

__all__ = [
    "AttemptDistribution",
    "BudgetExceeded",
    "ClosenessReport",
    "DegreePartition",
    "DirectedEdge",
    "EdgeEstimate",
    "Graph",
    "GraphConstructionError",
    "QueryCounts",
    "QueryOracle",
    "RelabeledView",
    "SampleReport",
    "SamplerConfig",
    "attempt_distribution",
    "build_graph",
    "conditional_closeness",
    "empirical_distribution",
    "enumerate_attempt_distribution",
    "estimate_edges",
    "estimate_edges_amplified",
    "fallback_uniform_edge",
    "light_degree",
    "mixture_attempt",
    "partition",
    "read_edge_list",
    "sample_degree_proportional_vertex",
    "sample_edge_almost_uniformly",
    "sample_heavy_edge",
    "sample_light_edge",
    "sample_undirected_edge",
    "verify_attempt_bounds",
    "vertex_return_distribution",
    "weighted_expectation",
    "write_edge_list",
]

__version__ = "0.1.0"
