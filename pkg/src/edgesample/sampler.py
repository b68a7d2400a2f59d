"""Almost-uniform directed-edge sampling through the query oracle.

One attempt flips a fair coin between two tracks over a degree threshold
theta:

* light track: uniform vertex u, fail if d(u) > theta, uniform slot
  j in [theta], return (u, j-th neighbor) if the slot is occupied. Every
  edge out of a light vertex wins with probability exactly 1/(n theta).
* heavy track: reach a heavy vertex v through a uniform occupied slot of
  a light vertex, then return (v, w) for a uniform neighbor w of v. A
  heavy edge (v, w) wins with probability d_L(v) / (n theta d(v)).

With theta >= sqrt(2 m / eps), per-attempt probabilities of any two edges
agree within a factor 1/(1 - eps/2), so the conditional distribution is
pointwise eps-close to uniform. The main routine budgets
q = ceil(10 n / ((1 - eps) sqrt(eps m_hat))) attempts; when that exceeds
n it reverts to the exactly-uniform (but slower per success) uniform-slot
fallback.

All randomness of a run (oracle vertex queries, coins, slot indices) is
drawn from one seeded generator in a fixed order: coin, vertex query,
slot j, then on the heavy track the neighbor index of v. Runs replay
bit-for-bit under the same seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .graph import DirectedEdge
from .oracle import QueryCounts, QueryOracle


def threshold_for(m_hat: float, epsilon: float) -> int:
    """Smallest integer theta with theta >= sqrt(2 m_hat / epsilon).

    The ceiling is re-checked in exact arithmetic so a float rounding of
    the square root can never undercut the bound.
    """
    theta = max(1, math.ceil(math.sqrt(2.0 * m_hat / epsilon)))
    while Fraction(theta) * theta * Fraction(epsilon) < 2 * Fraction(m_hat):
        theta += 1
    return theta


def attempt_budget(n: int, m_hat: float, epsilon: float) -> int:
    """ceil(10 n / ((1 - epsilon) sqrt(epsilon m_hat)))."""
    return max(1, math.ceil(10.0 * n / ((1.0 - epsilon) * math.sqrt(epsilon * m_hat))))


@dataclass(frozen=True)
class SamplerConfig:
    """Resolved parameters of one sampling run."""

    epsilon: float
    m_hat: float
    theta: int
    q: int

    def __post_init__(self):
        if not 0.0 < self.epsilon < 0.5:
            raise ValueError(
                f"epsilon must lie strictly inside (0, 0.5), got {self.epsilon}"
            )
        if self.m_hat <= 0:
            raise ValueError(f"edge estimate must be positive, got {self.m_hat}")
        if self.theta < 1 or self.q < 1:
            raise ValueError("theta and q must be >= 1")

    @classmethod
    def for_graph(cls, n: int, m_hat: float, epsilon: float) -> "SamplerConfig":
        if not 0.0 < epsilon < 0.5:
            raise ValueError(f"epsilon must lie strictly inside (0, 0.5), got {epsilon}")
        if m_hat <= 0:
            raise ValueError(f"edge estimate must be positive, got {m_hat}")
        return cls(
            epsilon=epsilon,
            m_hat=m_hat,
            theta=threshold_for(m_hat, epsilon),
            q=attempt_budget(n, m_hat, epsilon),
        )


@dataclass
class SampleReport:
    """Outcome of one sampling run; outcome None means Failure."""

    outcome: DirectedEdge | None
    attempts_used: int
    queries: QueryCounts
    config: SamplerConfig | None
    used_fallback: bool = False

    @property
    def failed(self) -> bool:
        return self.outcome is None


def sample_light_edge(oracle: QueryOracle, theta: int, rng: random.Random | None = None) -> DirectedEdge | None:
    """One light-track attempt; None is the fail outcome."""
    rng = oracle.rng if rng is None else rng
    u = oracle.random_vertex()
    if oracle.degree(u) > theta:
        return None
    j = rng.randint(1, theta)
    v = oracle.neighbor(u, j)
    if v is None:
        return None
    return DirectedEdge(u, v)


def sample_heavy_edge(oracle: QueryOracle, theta: int, rng: random.Random | None = None) -> DirectedEdge | None:
    """One heavy-track attempt; None is the fail outcome.

    The degree of the hit vertex v is queried once, both to test that v is
    heavy and to index a uniform neighbor, keeping an attempt within two
    degree queries.
    """
    rng = oracle.rng if rng is None else rng
    u = oracle.random_vertex()
    if oracle.degree(u) > theta:
        return None
    j = rng.randint(1, theta)
    v = oracle.neighbor(u, j)
    if v is None:
        return None
    dv = oracle.degree(v)
    if dv <= theta:
        return None
    w = oracle.neighbor(v, rng.randint(1, dv))
    return DirectedEdge(v, w)


def mixture_attempt(oracle: QueryOracle, theta: int, rng: random.Random | None = None) -> DirectedEdge | None:
    """Fair coin between the light and heavy tracks."""
    rng = oracle.rng if rng is None else rng
    if rng.random() < 0.5:
        return sample_light_edge(oracle, theta, rng)
    return sample_heavy_edge(oracle, theta, rng)


def sample_edge_almost_uniformly(
    oracle: QueryOracle, config: SamplerConfig, rng: random.Random | None = None
) -> SampleReport:
    """Run up to q mixture attempts; revert to the fallback when q > n."""
    rng = oracle.rng if rng is None else rng
    if config.q > oracle.n:
        return fallback_uniform_edge(oracle, rng=rng, config=config)
    before = oracle.counts.copy()
    for attempt in range(1, config.q + 1):
        edge = mixture_attempt(oracle, config.theta, rng)
        if edge is not None:
            return SampleReport(
                outcome=edge,
                attempts_used=attempt,
                queries=oracle.counts - before,
                config=config,
            )
    return SampleReport(
        outcome=None,
        attempts_used=config.q,
        queries=oracle.counts - before,
        config=config,
    )


def fallback_uniform_edge(
    oracle: QueryOracle,
    rng: random.Random | None = None,
    budget: int | None = None,
    config: SamplerConfig | None = None,
) -> SampleReport:
    """Exactly-uniform sampler: uniform vertex, uniform slot in [n].

    Each attempt returns any specific directed edge with probability
    1/n^2, so the conditional distribution is exactly uniform. Budget
    defaults to n attempts.
    """
    rng = oracle.rng if rng is None else rng
    n = oracle.n
    if n < 1:
        raise ValueError("graph has no vertices")
    budget = n if budget is None else budget
    before = oracle.counts.copy()
    for attempt in range(1, budget + 1):
        u = oracle.random_vertex()
        i = rng.randint(1, n)
        v = oracle.neighbor(u, i)
        if v is not None:
            return SampleReport(
                outcome=DirectedEdge(u, v),
                attempts_used=attempt,
                queries=oracle.counts - before,
                config=config,
                used_fallback=True,
            )
    return SampleReport(
        outcome=None,
        attempts_used=budget,
        queries=oracle.counts - before,
        config=config,
        used_fallback=True,
    )


def sample_undirected_edge(
    oracle: QueryOracle, config: SamplerConfig, rng: random.Random | None = None
) -> tuple[tuple[int, int] | None, SampleReport]:
    """Sample a directed edge and forget its orientation.

    Each undirected edge owns exactly two directed versions, so its
    probability is their sum and inherits the pointwise closeness bound
    over the undirected edge set.
    """
    report = sample_edge_almost_uniformly(oracle, config, rng)
    if report.outcome is None:
        return None, report
    return report.outcome.undirected(), report


def sample_degree_proportional_vertex(
    oracle: QueryOracle, config: SamplerConfig, rng: random.Random | None = None
) -> tuple[int | None, SampleReport]:
    """Sample a vertex with probability close to d(v) / m_dir.

    Samples an edge almost uniformly and returns either endpoint with
    probability 1/2; v sits in d(v) directed edges as origin and d(v) as
    target, so the exactly-uniform case lands on d(v)/m_dir.
    """
    rng = oracle.rng if rng is None else rng
    report = sample_edge_almost_uniformly(oracle, config, rng)
    if report.outcome is None:
        return None, report
    v = report.outcome.origin if rng.random() < 0.5 else report.outcome.target
    return v, report


@dataclass
class WeightedExpectation:
    """Monte Carlo mean of an edge weight under the sampling distribution."""

    mean: float
    std_error: float
    samples: int
    failures: int
    queries: QueryCounts = field(default_factory=QueryCounts)


def weighted_expectation(
    oracle: QueryOracle,
    config: SamplerConfig,
    weight: Mapping[tuple[int, int], float] | Callable[[DirectedEdge], float],
    samples: int,
    rng: random.Random | None = None,
    max_failures_per_draw: int = 100,
) -> WeightedExpectation:
    """Average an edge weight over ``samples`` successful draws.

    The sampling distribution is pointwise eps-close to uniform, so the
    limit of the mean is within eps * |uniform mean| of the uniform mean.
    Raises RuntimeError if one draw fails ``max_failures_per_draw`` times
    in a row.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    weight_fn = weight if callable(weight) else weight.__getitem__
    rng = oracle.rng if rng is None else rng
    before = oracle.counts.copy()
    total = 0.0
    total_sq = 0.0
    failures = 0
    for _ in range(samples):
        for _retry in range(max_failures_per_draw):
            report = sample_edge_almost_uniformly(oracle, config, rng)
            if report.outcome is not None:
                w = float(weight_fn(report.outcome))
                total += w
                total_sq += w * w
                break
            failures += 1
        else:
            raise RuntimeError(
                f"a draw failed {max_failures_per_draw} consecutive times"
            )
    mean = total / samples
    variance = max(0.0, total_sq / samples - mean * mean)
    return WeightedExpectation(
        mean=mean,
        std_error=math.sqrt(variance / samples),
        samples=samples,
        failures=failures,
        queries=oracle.counts - before,
    )
