"""Exact per-edge return probabilities and closeness diagnostics.

Two independent routes to the same distribution keep each other honest:

* ``attempt_distribution`` evaluates the closed form of one mixture
  attempt: a light edge is returned with probability 1/(2 n theta); a
  heavy edge (v, w) with probability d_L(v) / (2 n theta d(v)), where
  d_L(v) counts v's light neighbors.
* ``enumerate_attempt_distribution`` walks the attempt's full sample
  space (coin x start vertex x slot index x neighbor pick) step by step
  and tallies outcome weights.

Probabilities are exact rationals while the graph is small enough to
enumerate its directed edges cheaply; beyond that, doubles with
compensated summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from scipy import stats

from .graph import DirectedEdge, Graph, light_degree, partition

# Largest directed-edge count for which exact rationals stay cheap.
EXACT_EDGE_LIMIT = 10**6


@dataclass
class AttemptDistribution:
    """Per-directed-edge return probability of one mixture attempt."""

    theta: int
    per_edge: dict[DirectedEdge, Fraction | float]
    success_prob: Fraction | float
    exact: bool

    def probability(self, e: DirectedEdge) -> Fraction | float:
        return self.per_edge.get(e, Fraction(0) if self.exact else 0.0)

    def conditional(self) -> dict[DirectedEdge, Fraction | float]:
        """Distribution of the returned edge given that the attempt succeeded."""
        if self.success_prob == 0:
            raise ValueError("success probability is zero; conditional undefined")
        return {e: p / self.success_prob for e, p in self.per_edge.items()}


def attempt_distribution(g: Graph, theta: int, exact: bool | None = None) -> AttemptDistribution:
    """Closed-form distribution of one fair light/heavy mixture attempt."""
    if theta < 1:
        raise ValueError(f"theta must be >= 1, got {theta}")
    if exact is None:
        exact = g.m_dir <= EXACT_EDGE_LIMIT
    part = partition(g, theta)
    n = g.n
    per_edge: dict[DirectedEdge, Fraction | float] = {}
    light_p = Fraction(1, 2 * n * theta) if exact else 1.0 / (2.0 * n * theta)
    for v in range(n):
        d = g.degree(v)
        if d <= theta:
            for w in g.neighbors(v):
                per_edge[DirectedEdge(v, w)] = light_p
        else:
            dl = light_degree(g, part, v)
            heavy_p = (
                Fraction(dl, 2 * n * theta * d) if exact else dl / (2.0 * n * theta * d)
            )
            for w in g.neighbors(v):
                per_edge[DirectedEdge(v, w)] = heavy_p
    if exact:
        success = sum(per_edge.values(), Fraction(0))
    else:
        success = math.fsum(per_edge.values())
    return AttemptDistribution(theta=theta, per_edge=per_edge, success_prob=success, exact=exact)


def enumerate_attempt_distribution(g: Graph, theta: int) -> AttemptDistribution:
    """Exhaustive enumeration of one mixture attempt's sample space.

    Follows the procedures literally: a fair coin picks the light or heavy
    track; then start vertex u (1/n), slot j in [theta] (1/theta), and on
    the heavy track a uniform neighbor index of the hit vertex. Exact
    rationals throughout; intended for small graphs.
    """
    if theta < 1:
        raise ValueError(f"theta must be >= 1, got {theta}")
    half = Fraction(1, 2)
    per_edge: dict[DirectedEdge, Fraction] = {
        e: Fraction(0) for e in g.directed_edges()
    }
    for e, p in _enumerate_light(g, theta).items():
        per_edge[e] += half * p
    for e, p in _enumerate_heavy(g, theta).items():
        per_edge[e] += half * p
    success = sum(per_edge.values(), Fraction(0))
    return AttemptDistribution(theta=theta, per_edge=per_edge, success_prob=success, exact=True)


def _enumerate_light(g: Graph, theta: int) -> dict[DirectedEdge, Fraction]:
    out: dict[DirectedEdge, Fraction] = {}
    w_uj = Fraction(1, g.n * theta)
    for u in range(g.n):
        if g.degree(u) > theta:
            continue
        for j in range(1, theta + 1):
            v = g.neighbor(u, j)
            if v is not None:
                out[DirectedEdge(u, v)] = out.get(DirectedEdge(u, v), Fraction(0)) + w_uj
    return out


def _enumerate_heavy(g: Graph, theta: int) -> dict[DirectedEdge, Fraction]:
    out: dict[DirectedEdge, Fraction] = {}
    w_uj = Fraction(1, g.n * theta)
    for u in range(g.n):
        if g.degree(u) > theta:
            continue
        for j in range(1, theta + 1):
            v = g.neighbor(u, j)
            if v is None or g.degree(v) <= theta:
                continue
            w_pick = w_uj / g.degree(v)
            for w in g.neighbors(v):
                e = DirectedEdge(v, w)
                out[e] = out.get(e, Fraction(0)) + w_pick
    return out


def enumerate_light_distribution(g: Graph, theta: int) -> dict[DirectedEdge, Fraction]:
    """Exhaustive per-edge return probabilities of the light track alone."""
    return _enumerate_light(g, theta)


def enumerate_heavy_distribution(g: Graph, theta: int) -> dict[DirectedEdge, Fraction]:
    """Exhaustive per-edge return probabilities of the heavy track alone."""
    return _enumerate_heavy(g, theta)


def enumerate_fallback_distribution(g: Graph) -> dict[DirectedEdge, Fraction]:
    """Exhaustive per-edge probabilities of one uniform-slot fallback attempt.

    Start vertex u and slot i are both uniform on [n]; the attempt returns
    (u, i-th neighbor) when i <= d(u). Every directed edge lands on exactly
    one (u, i) outcome, so each has probability 1/n^2.
    """
    out: dict[DirectedEdge, Fraction] = {}
    w = Fraction(1, g.n * g.n)
    for u in range(g.n):
        for i in range(1, g.n + 1):
            v = g.neighbor(u, i)
            if v is not None:
                e = DirectedEdge(u, v)
                out[e] = out.get(e, Fraction(0)) + w
    return out


@dataclass
class ClosenessReport:
    """How far the conditional returned-edge distribution is from uniform."""

    max_ratio_dev: Fraction | float
    tv_distance: Fraction | float
    success_prob: Fraction | float
    edge_count: int

    def pointwise_ok(self, epsilon: float) -> bool:
        if isinstance(self.max_ratio_dev, Fraction):
            return self.max_ratio_dev <= Fraction(epsilon)
        return self.max_ratio_dev <= epsilon


def conditional_closeness(dist: AttemptDistribution) -> ClosenessReport:
    """Max relative deviation and TV distance of the conditional vs uniform.

    The uniform reference puts 1/m_dir on every directed edge, so an edge
    the attempt can never return contributes a deviation of 1.
    """
    if dist.success_prob == 0:
        raise ValueError("success probability is zero; conditional undefined")
    m = len(dist.per_edge)
    one = Fraction(1) if dist.exact else 1.0
    max_dev = Fraction(0) if dist.exact else 0.0
    tv_acc = []
    for p in dist.per_edge.values():
        ratio = p * m / dist.success_prob
        dev = abs(ratio - one)
        if dev > max_dev:
            max_dev = dev
        tv_acc.append(abs(p / dist.success_prob - one / m))
    tv = sum(tv_acc, Fraction(0)) / 2 if dist.exact else math.fsum(tv_acc) / 2.0
    return ClosenessReport(
        max_ratio_dev=max_dev, tv_distance=tv, success_prob=dist.success_prob, edge_count=m
    )


def vertex_return_distribution(dist: AttemptDistribution) -> dict[int, Fraction | float]:
    """Distribution of the vertex obtained by returning either endpoint of
    the conditionally-sampled edge with probability 1/2 each."""
    cond = dist.conditional()
    half = Fraction(1, 2) if dist.exact else 0.5
    out: dict[int, Fraction | float] = {}
    zero = Fraction(0) if dist.exact else 0.0
    for e, p in cond.items():
        out[e.origin] = out.get(e.origin, zero) + half * p
        out[e.target] = out.get(e.target, zero) + half * p
    return out


@dataclass
class BoundCheck:
    """One analytic bound: its margin and verdict."""

    name: str
    applicable: bool
    passed: bool
    margin: Fraction | float | None
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "passed": self.passed,
            "margin": None if self.margin is None else float(self.margin),
            "note": self.note,
        }


@dataclass
class AttemptBoundsReport:
    theta: int
    epsilon: float
    checks: list[BoundCheck] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks if c.applicable)

    def as_dict(self) -> dict:
        return {
            "theta": self.theta,
            "epsilon": self.epsilon,
            "all_passed": self.all_passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def verify_attempt_bounds(g: Graph, theta: int, epsilon: float) -> AttemptBoundsReport:
    """Exact-arithmetic check of every bound the attempt analysis promises.

    * light-track success equals e_light / (n theta);
    * heavy-track success lies in
      [e_heavy (1 - m/theta^2) / (n theta), e_heavy / (n theta)];
    * every heavy vertex has d_L(v) > (1 - m/theta^2) d(v);
    * the mixture succeeds with probability >= (1 - eps) m / (2 n theta),
      applicable only when theta >= sqrt(2 m / eps).

    Checks whose hypotheses fail are marked not-applicable, not failed.
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    part = partition(g, theta)
    n, m = g.n, g.m_dir
    eps = Fraction(epsilon)
    dist = attempt_distribution(g, theta, exact=True)
    report = AttemptBoundsReport(theta=theta, epsilon=epsilon)

    light_sum = 2 * sum(
        (p for e, p in dist.per_edge.items() if g.degree(e.origin) <= theta), Fraction(0)
    )
    light_formula = Fraction(part.e_light, n * theta)
    report.checks.append(
        BoundCheck(
            name="light_success_equals_e_light_over_n_theta",
            applicable=True,
            passed=light_sum == light_formula,
            margin=light_sum - light_formula,
            note=f"success={float(light_sum):.6g}",
        )
    )

    heavy_sum = 2 * sum(
        (p for e, p in dist.per_edge.items() if g.degree(e.origin) > theta), Fraction(0)
    )
    upper = Fraction(part.e_heavy, n * theta)
    lower = upper * (1 - Fraction(m, theta * theta))
    report.checks.append(
        BoundCheck(
            name="heavy_success_within_interval",
            applicable=True,
            passed=lower <= heavy_sum <= upper,
            margin=min(heavy_sum - lower, upper - heavy_sum),
            note=f"success={float(heavy_sum):.6g} in [{float(lower):.6g}, {float(upper):.6g}]",
        )
    )

    heavy = sorted(part.heavy_vertices)
    if heavy:
        factor = 1 - Fraction(m, theta * theta)
        margin = min(
            Fraction(light_degree(g, part, v)) - factor * g.degree(v) for v in heavy
        )
        report.checks.append(
            BoundCheck(
                name="heavy_light_degree_dominates",
                applicable=True,
                passed=margin > 0,
                margin=margin,
                note=f"{len(heavy)} heavy vertices",
            )
        )
    else:
        report.checks.append(
            BoundCheck(
                name="heavy_light_degree_dominates",
                applicable=False,
                passed=True,
                margin=None,
                note="no heavy vertices",
            )
        )

    applicable = eps * theta * theta >= 2 * m
    if applicable:
        bound = (1 - eps) * Fraction(m, 2 * n * theta)
        report.checks.append(
            BoundCheck(
                name="mixture_success_lower_bound",
                applicable=True,
                passed=dist.success_prob >= bound,
                margin=dist.success_prob - bound,
                note=f"success={float(dist.success_prob):.6g} >= {float(bound):.6g}",
            )
        )
    else:
        report.checks.append(
            BoundCheck(
                name="mixture_success_lower_bound",
                applicable=False,
                passed=True,
                margin=None,
                note="theta below sqrt(2 m / eps); bound not claimed",
            )
        )
    return report


def run_failure_probability(g: Graph, config) -> float:
    """Exact failure probability of one full sampling run on a known graph.

    Uses the attempt success probability of whichever track the run takes:
    (1 - s)^q on the mixture path, (1 - m/n^2)^n on the fallback path.
    """
    if config.q > g.n:
        per_attempt = g.m_dir / (g.n * g.n)
        budget = g.n
    else:
        per_attempt = float(attempt_distribution(g, config.theta, exact=True).success_prob)
        budget = config.q
    if per_attempt >= 1.0:
        return 0.0
    return math.exp(budget * math.log1p(-per_attempt))


@dataclass
class EmpiricalReport:
    """Monte Carlo frequencies checked against a reference distribution."""

    trials: int
    counts: dict[DirectedEdge, int]
    chi_square: float
    p_value: float
    max_std_dev: float
    off_support: int
    attempts_total: int
    failures: int
    seed: int | None

    def frequency(self, e: DirectedEdge) -> float:
        return self.counts.get(e, 0) / self.trials


def empirical_distribution(
    g: Graph,
    trials: int,
    seed: int | None = None,
    theta: int | None = None,
    config=None,
    reference: dict[DirectedEdge, Fraction | float] | None = None,
) -> EmpiricalReport:
    """Drive the real sampler ``trials`` times and score the frequencies.

    With ``theta`` given, each trial repeats single mixture attempts until
    one succeeds (the conditional distribution). With ``config`` given,
    each trial is a full budgeted sampling run and failed runs are counted
    separately. The chi-square statistic and the max standardized count
    deviation are computed against ``reference`` (default: the analytic
    conditional distribution for the mode in use).
    """
    from . import sampler as _sampler
    from .oracle import QueryOracle

    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if (theta is None) == (config is None):
        raise ValueError("give exactly one of theta or config")

    oracle = QueryOracle(g, seed=seed)
    counts: dict[DirectedEdge, int] = {}
    attempts_total = 0
    failures = 0
    collected = 0
    while collected < trials:
        if theta is not None:
            edge = None
            while edge is None:
                edge = _sampler.mixture_attempt(oracle, theta)
                attempts_total += 1
        else:
            report = _sampler.sample_edge_almost_uniformly(oracle, config)
            attempts_total += report.attempts_used
            if report.outcome is None:
                failures += 1
                collected += 1
                continue
            edge = report.outcome
        counts[edge] = counts.get(edge, 0) + 1
        collected += 1

    if reference is None:
        if theta is not None:
            reference = attempt_distribution(g, theta).conditional()
        elif config.q <= g.n:
            reference = attempt_distribution(g, config.theta).conditional()
        else:
            reference = {e: Fraction(1, g.m_dir) for e in g.directed_edges()}

    returned = trials - failures
    support = [(e, float(p)) for e, p in reference.items() if p > 0]
    off_support = sum(c for e, c in counts.items() if float(reference.get(e, 0)) == 0.0)
    f_obs = [counts.get(e, 0) for e, _ in support]
    f_exp = [returned * p for _, p in support]
    if returned > 0 and off_support == 0:
        chi2, p_value = stats.chisquare(f_obs, f_exp)
        max_std = max(
            abs(o - ex) / math.sqrt(ex * (1.0 - ex / returned)) if 0 < ex < returned else 0.0
            for o, ex in zip(f_obs, f_exp)
        )
    else:
        chi2, p_value, max_std = math.inf, 0.0, math.inf
    return EmpiricalReport(
        trials=trials,
        counts=counts,
        chi_square=float(chi2),
        p_value=float(p_value),
        max_std_dev=float(max_std),
        off_support=off_support,
        attempts_total=attempts_total,
        failures=failures,
        seed=seed,
    )
