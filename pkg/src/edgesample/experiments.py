"""Desk-scale experiments: query-cost scaling and the hidden-clique budget.

``run_scaling`` measures mean metered queries of full estimate+sample runs
across a family of graphs and fits the log-log slope against
n / sqrt(eps * m); the sampler's cost should scale linearly in that ratio.

``run_lower_bound`` plants a clique holding at least half the directed
edges inside a disjoint union, relabels all vertex ids uniformly at random
every trial, and runs budget-capped strategies against it. Until a query
touches the hidden clique (a "witness": a degree or neighbor query on a
clique vertex, or a pair query on a clique pair), clique ids are
information-theoretically hidden, so any strategy with a small budget must
under-sample clique edges; 1/2 minus the observed clique hit rate is then
a certified lower bound on the total variational distance from uniform.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .estimate import estimate_edges
from .generators import generate
from .graph import Graph, RelabeledView, build_graph
from .oracle import BudgetExceeded, QueryOracle
from .sampler import SamplerConfig, sample_edge_almost_uniformly

# ---------------------------------------------------------------------------
# Query-cost scaling
# ---------------------------------------------------------------------------


@dataclass
class ScalingRun:
    """Aggregated query cost of repeated full runs on one graph."""

    spec: str
    n: int
    m_dir: int
    epsilon: float
    trials: int
    mean_queries: float
    stddev_queries: float
    failure_rate: float

    @property
    def cost_scale(self) -> float:
        """The predicted cost driver n / sqrt(epsilon * m_dir)."""
        return self.n / math.sqrt(self.epsilon * self.m_dir)


@dataclass
class ScalingResult:
    runs: list[ScalingRun]
    slope: float
    intercept: float


def run_scaling(
    specs: list[str],
    epsilon: float,
    trials: int,
    seed: int,
    estimator: str = "exact",
    samples: int | None = None,
) -> ScalingResult:
    """Measure mean queries per run on each spec and fit the log-log slope."""
    if trials < 30:
        raise ValueError(f"need at least 30 trials for stable means, got {trials}")
    master = random.Random(seed)
    runs = []
    for spec in specs:
        g = generate(spec, seed=master.getrandbits(32))
        totals = np.empty(trials)
        failures = 0
        for t in range(trials):
            oracle = QueryOracle(g, seed=master.getrandbits(63))
            est = estimate_edges(oracle, estimator, samples)
            cfg = SamplerConfig.for_graph(g.n, est.m_hat, epsilon)
            report = sample_edge_almost_uniformly(oracle, cfg)
            if report.outcome is None:
                failures += 1
            totals[t] = oracle.counts.total
        runs.append(
            ScalingRun(
                spec=spec,
                n=g.n,
                m_dir=g.m_dir,
                epsilon=epsilon,
                trials=trials,
                mean_queries=float(totals.mean()),
                stddev_queries=float(totals.std()),
                failure_rate=failures / trials,
            )
        )
    xs = np.log([r.cost_scale for r in runs])
    ys = np.log([r.mean_queries for r in runs])
    if len(runs) >= 2:
        slope, intercept = np.polyfit(xs, ys, 1)
    else:
        slope, intercept = math.nan, math.nan
    return ScalingResult(runs=runs, slope=float(slope), intercept=float(intercept))


# ---------------------------------------------------------------------------
# Hidden-clique budget experiment
# ---------------------------------------------------------------------------


def clique_size_for(base: Graph) -> int:
    """Smallest clique size whose directed edge count k(k-1) reaches the
    base graph's m_dir, so the clique holds at least half the union's edges."""
    k = max(2, math.ceil(math.sqrt(base.m_dir)))
    while k * (k - 1) < base.m_dir:
        k += 1
    return k


def planted_union(base: Graph, k: int) -> tuple[Graph, frozenset[int]]:
    """Disjoint union of base and a k-clique, clique ids last; unshuffled."""
    edges = list(base.undirected_edges())
    edges += [
        (base.n + i, base.n + j) for i in range(k) for j in range(i + 1, k)
    ]
    g = build_graph(edges, base.n + k)
    return g, frozenset(range(base.n, base.n + k))


class WitnessOracle(QueryOracle):
    """Oracle that flags the first query revealing clique membership."""

    def __init__(self, graph, clique_vertices: frozenset[int], seed=None, budget=None):
        super().__init__(graph, seed=seed, budget=budget)
        self.clique_vertices = clique_vertices
        self.witnessed = False

    def degree(self, v: int) -> int:
        d = super().degree(v)
        if v in self.clique_vertices:
            self.witnessed = True
        return d

    def neighbor(self, v: int, i: int) -> int | None:
        w = super().neighbor(v, i)
        if v in self.clique_vertices:
            self.witnessed = True
        return w

    def pair(self, v: int, w: int) -> bool:
        ans = super().pair(v, w)
        if v != w and v in self.clique_vertices and w in self.clique_vertices:
            self.witnessed = True
        return ans


class TruncatedSamplerStrategy:
    """The mixture sampler itself, cut off by the hard query meter.

    Receives the true edge count (the budget phenomenon persists even for
    strategies that know m and n exactly).
    """

    name = "truncated-sampler"

    def __init__(self, epsilon: float = 0.25):
        self.epsilon = epsilon

    def run(self, oracle: QueryOracle, budget: int, rng: random.Random):
        cfg = SamplerConfig.for_graph(oracle.n, float(oracle.graph.m_dir), self.epsilon)
        report = sample_edge_almost_uniformly(oracle, cfg, rng)
        return None if report.outcome is None else tuple(report.outcome)


class GreedyPairStrategy:
    """Hunt for high-degree vertices, then confirm an edge among them.

    Spends up to two thirds of the budget on (vertex, degree) probes, then
    pair-queries sampled vertices in descending degree order and returns
    the first confirmed pair. Finds planted-clique edges quickly once two
    clique vertices have been probed (each probe is a witness).
    """

    name = "greedy-pairs"

    def run(self, oracle: QueryOracle, budget: int, rng: random.Random):
        probe_budget = (2 * budget) // 3
        seen: dict[int, int] = {}
        while oracle.counts.total + 2 <= probe_budget:
            v = oracle.random_vertex()
            seen[v] = oracle.degree(v)
        ranked = sorted(seen, key=seen.get, reverse=True)
        for i in range(len(ranked)):
            for j in range(i + 1, len(ranked)):
                if oracle.counts.total >= budget:
                    return None
                if oracle.pair(ranked[i], ranked[j]):
                    return (ranked[i], ranked[j])
        return None


class BlindGuessStrategy:
    """No queries at all: return a uniformly random ordered vertex pair."""

    name = "blind-guess"

    def run(self, oracle: QueryOracle, budget: int, rng: random.Random):
        u = rng.randrange(oracle.n)
        v = rng.randrange(oracle.n - 1)
        if v >= u:
            v += 1
        return (u, v)


DEFAULT_STRATEGIES = (TruncatedSamplerStrategy(), GreedyPairStrategy(), BlindGuessStrategy())


def default_budgets(n: int, m_dir: int) -> list[int]:
    """Geometric sweep bracketing the n / sqrt(m) transition."""
    base = n / math.sqrt(m_dir)
    return [max(1, math.ceil(base * f)) for f in (0.01, 0.1, 1.0, 10.0)]


@dataclass
class LowerBoundRun:
    """One (strategy, budget) cell of the hidden-clique experiment."""

    base_spec: str
    n: int
    m_dir: int
    k: int
    e_k_dir: int
    budget: int
    strategy: str
    trials: int
    clique_hit_rate: float
    witness_rate: float
    return_rate: float
    tv_lower_estimate: float


def run_lower_bound(
    base_spec: str,
    strategies=DEFAULT_STRATEGIES,
    budgets: list[int] | None = None,
    trials: int = 1000,
    seed: int = 0,
    base_seed: int = 0,
) -> list[LowerBoundRun]:
    """Run each strategy at each budget against per-trial relabelings.

    The planted union is built once; each trial wraps it in a fresh
    uniformly random id permutation (equivalent in distribution to
    rebuilding the labeled graph), so strategies can never learn clique
    ids across trials.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    base = generate(base_spec, seed=base_seed)
    k = clique_size_for(base)
    union, clique_ids = planted_union(base, k)
    if budgets is None:
        budgets = default_budgets(union.n, union.m_dir)
    master = random.Random(seed)
    results = []
    for strategy in strategies:
        for budget in budgets:
            perm_rng = np.random.default_rng(master.getrandbits(63))
            returns = hits = witnesses = 0
            for _ in range(trials):
                perm = perm_rng.permutation(union.n)
                view = RelabeledView(union, perm)
                clique_new = frozenset(int(perm[v]) for v in clique_ids)
                oracle = WitnessOracle(
                    view, clique_new, seed=master.getrandbits(63), budget=budget
                )
                try:
                    answer = strategy.run(oracle, budget, oracle.rng)
                except BudgetExceeded:
                    answer = None
                if oracle.witnessed:
                    witnesses += 1
                if answer is not None:
                    returns += 1
                    u, v = answer
                    if u != v and u in clique_new and v in clique_new:
                        hits += 1
            hit_rate = hits / returns if returns else 0.0
            results.append(
                LowerBoundRun(
                    base_spec=base_spec,
                    n=union.n,
                    m_dir=union.m_dir,
                    k=k,
                    e_k_dir=k * (k - 1),
                    budget=budget,
                    strategy=strategy.name,
                    trials=trials,
                    clique_hit_rate=hit_rate,
                    witness_rate=witnesses / trials,
                    return_rate=returns / trials,
                    tv_lower_estimate=max(0.0, 0.5 - hit_rate),
                )
            )
    return results
