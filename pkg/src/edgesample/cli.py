"""Command-line front end.

Subcommands: ``sample``, ``estimate``, ``verify``, ``bench``, ``lb``,
``gen``. Reports are machine-readable (JSON lines, or CSV rows plus a
JSON summary on stderr for the experiment commands), every report echoes
the fully resolved run configuration, floats are printed with 12
significant digits, and identical configuration plus seed reproduces
byte-identical output.

Exit status: 0 success, 1 a sampling run ended in Failure, 2 usage error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import secrets
import sys
from fractions import Fraction

from .analytic import attempt_distribution, conditional_closeness, verify_attempt_bounds
from .estimate import ESTIMATORS, estimate_edges_amplified
from .experiments import (
    BlindGuessStrategy,
    GreedyPairStrategy,
    TruncatedSamplerStrategy,
    run_lower_bound,
    run_scaling,
)
from .generators import generate
from .graph import read_edge_list, write_edge_list
from .oracle import QueryOracle
from .sampler import SamplerConfig, sample_edge_almost_uniformly, threshold_for

EXIT_OK = 0
EXIT_FAILURE_OUTCOME = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(ValueError):
    """Bad flag combination or value; maps to exit status 2."""


def _fmt(value):
    """12-significant-digit floats; Fractions become floats first."""
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, float):
        if math.isfinite(value):
            return float(f"{value:.12g}")
        return str(value)
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    return value


def _emit(obj, stream=None) -> None:
    print(json.dumps(_fmt(obj), sort_keys=True), file=stream or sys.stdout)


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("EDGE_SAMPLER_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"EDGE_SAMPLER_SEED must be an integer, got {env!r}")
    return secrets.randbits(32)


def _load_graph(args, seed: int):
    has_file = getattr(args, "graph", None) is not None
    has_spec = getattr(args, "generate", None) is not None
    if has_file == has_spec:
        raise UsageError("give exactly one graph source: --graph FILE or --generate SPEC")
    if has_file:
        return read_edge_list(args.graph), f"file:{args.graph}"
    return generate(args.generate, seed=seed), args.generate


def _check_epsilon(epsilon: float) -> float:
    if not 0.0 < epsilon < 0.5:
        raise UsageError(f"--epsilon must lie strictly inside (0, 0.5), got {epsilon}")
    return epsilon


def _graph_summary(g) -> dict:
    return {"n": g.n, "m_directed": g.m_dir, "m_undirected": g.m_dir // 2}


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", metavar="FILE", help="edge-list file ('u v' per line, optional 'n COUNT' header)")
    p.add_argument("--generate", metavar="SPEC", help="generator spec, e.g. star:5, er:1000,0.05, clique_union:path:4,3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgesample",
        description="Sample edges of a graph nearly uniformly through metered vertex/degree/neighbor queries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="draw almost-uniform directed edges")
    _add_graph_source(p)
    p.add_argument("--epsilon", type=float, default=0.25)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=1, help="independent edge draws")
    p.add_argument("--estimator", choices=sorted(ESTIMATORS), default="degree-sum-mc")
    p.add_argument("--samples", type=int, help="vertex samples per estimator pass")
    p.add_argument("--reps", type=int, default=1, help="odd number of estimates to take a median over")
    p.add_argument(
        "--reuse-estimate",
        action="store_true",
        help="estimate m once and reuse it for all draws; draws are then "
        "correlated through the shared estimate instead of independent",
    )

    p = sub.add_parser("estimate", help="estimate the directed edge count")
    _add_graph_source(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--estimator", choices=sorted(ESTIMATORS), default="degree-sum-mc")
    p.add_argument("--samples", type=int)
    p.add_argument("--reps", type=int, default=1)

    p = sub.add_parser("verify", help="exact closeness report and analytic bound margins")
    _add_graph_source(p)
    p.add_argument("--epsilon", type=float, default=0.25)
    p.add_argument("--theta", type=int, help="threshold override (default: ceil(sqrt(2 m / epsilon)))")
    p.add_argument("--seed", type=int)

    p = sub.add_parser("bench", help="query-cost scaling over a family of graphs")
    p.add_argument("--generate", metavar="SPEC", action="append", required=True)
    p.add_argument("--epsilon", type=float, default=0.25)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.add_argument("--estimator", choices=sorted(ESTIMATORS), default="exact")
    p.add_argument("--samples", type=int)
    p.add_argument("--plot-data", action="store_true", help="emit gnuplot-ready columns instead of CSV")

    p = sub.add_parser("lb", help="hidden-clique budget experiment")
    p.add_argument("--generate", metavar="SPEC", required=True, help="base graph spec; a clique holding half the edges is planted")
    p.add_argument("--epsilon", type=float, default=0.25, help="epsilon for the truncated sampler strategy")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--budgets", help="comma-separated query budgets (default: geometric sweep around n/sqrt(m))")
    p.add_argument("--strategies", help="comma-separated subset of: truncated-sampler,greedy-pairs,blind-guess")
    p.add_argument("--seed", type=int)
    p.add_argument("--plot-data", action="store_true")

    p = sub.add_parser("gen", help="write a generated graph as an edge-list file")
    p.add_argument("--generate", metavar="SPEC", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", metavar="FILE", required=True)
    return parser


def _cmd_sample(args) -> int:
    epsilon = _check_epsilon(args.epsilon)
    if args.count < 1:
        raise UsageError(f"--count must be >= 1, got {args.count}")
    seed = _resolve_seed(args)
    g, source = _load_graph(args, seed)
    oracle = QueryOracle(g, seed=seed)
    config_echo = {
        "command": "sample",
        "source": source,
        "epsilon": epsilon,
        "seed": seed,
        "count": args.count,
        "estimator": args.estimator,
        "samples": args.samples,
        "reps": args.reps,
        "reuse_estimate": args.reuse_estimate,
        **_graph_summary(g),
    }
    est = None
    any_failure = False
    for _ in range(args.count):
        if est is None or not args.reuse_estimate:
            est = estimate_edges_amplified(oracle, args.estimator, args.samples, args.reps)
        cfg = SamplerConfig.for_graph(g.n, est.m_hat, epsilon)
        report = sample_edge_almost_uniformly(oracle, cfg)
        line = {
            "attempts": report.attempts_used,
            "queries": report.queries.as_dict(),
            "theta": cfg.theta,
            "q": cfg.q,
            "m_hat": est.m_hat,
            "fallback": report.used_fallback,
            "config": config_echo,
        }
        if report.outcome is None:
            line["failure"] = True
            any_failure = True
        else:
            line["edge"] = list(report.outcome)
        _emit(line)
    return EXIT_FAILURE_OUTCOME if any_failure else EXIT_OK


def _cmd_estimate(args) -> int:
    seed = _resolve_seed(args)
    g, source = _load_graph(args, seed)
    oracle = QueryOracle(g, seed=seed)
    est = estimate_edges_amplified(oracle, args.estimator, args.samples, args.reps)
    _emit(
        {
            "m_hat": est.m_hat,
            "method": est.method,
            "queries": est.queries_used.as_dict(),
            "config": {
                "command": "estimate",
                "source": source,
                "seed": seed,
                "estimator": args.estimator,
                "samples": args.samples,
                "reps": args.reps,
                **_graph_summary(g),
            },
        }
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    epsilon = _check_epsilon(args.epsilon)
    seed = _resolve_seed(args)
    g, source = _load_graph(args, seed)
    if g.m_dir == 0:
        raise UsageError("graph has no edges; nothing to verify")
    theta = args.theta if args.theta is not None else threshold_for(float(g.m_dir), epsilon)
    if theta < 1:
        raise UsageError(f"--theta must be >= 1, got {theta}")
    dist = attempt_distribution(g, theta)
    report = {
        "theta": theta,
        "success_prob": dist.success_prob,
        "bounds": verify_attempt_bounds(g, theta, epsilon).as_dict(),
        "config": {
            "command": "verify",
            "source": source,
            "epsilon": epsilon,
            "theta": theta,
            "seed": seed,
            **_graph_summary(g),
        },
    }
    if dist.success_prob > 0:
        closeness = conditional_closeness(dist)
        report["closeness"] = {
            "max_ratio_dev": closeness.max_ratio_dev,
            "tv_distance": closeness.tv_distance,
            "pointwise_ok": closeness.pointwise_ok(epsilon),
        }
    else:
        report["closeness"] = None
    _emit(report)
    return EXIT_OK


_SCALING_COLUMNS = (
    "spec,n,m_dir,epsilon,trials,mean_queries,stddev_queries,failure_rate,cost_scale"
)


def _cmd_bench(args) -> int:
    epsilon = _check_epsilon(args.epsilon)
    seed = _resolve_seed(args)
    result = run_scaling(
        args.generate, epsilon, args.trials, seed, args.estimator, args.samples
    )
    rows = sorted(result.runs, key=lambda r: (r.cost_scale, r.spec))
    if args.plot_data:
        print("# cost_scale mean_queries stddev_queries")
        for r in rows:
            print(f"{r.cost_scale:.12g} {r.mean_queries:.12g} {r.stddev_queries:.12g}")
    else:
        print(_SCALING_COLUMNS)
        for r in rows:
            print(
                f"{r.spec},{r.n},{r.m_dir},{r.epsilon:.12g},{r.trials},"
                f"{r.mean_queries:.12g},{r.stddev_queries:.12g},"
                f"{r.failure_rate:.12g},{r.cost_scale:.12g}"
            )
    _emit(
        {
            "slope": result.slope,
            "intercept": result.intercept,
            "config": {
                "command": "bench",
                "specs": list(args.generate),
                "epsilon": epsilon,
                "trials": args.trials,
                "seed": seed,
                "estimator": args.estimator,
                "samples": args.samples,
            },
        },
        stream=sys.stderr,
    )
    return EXIT_OK


_LB_STRATEGIES = {
    "truncated-sampler": TruncatedSamplerStrategy,
    "greedy-pairs": GreedyPairStrategy,
    "blind-guess": BlindGuessStrategy,
}

_LB_COLUMNS = (
    "base_spec,n,m_dir,k,e_k_dir,budget,strategy,trials,"
    "clique_hit_rate,witness_rate,return_rate,tv_lower_estimate,witness_envelope"
)


def _cmd_lb(args) -> int:
    epsilon = _check_epsilon(args.epsilon)
    seed = _resolve_seed(args)
    budgets = None
    if args.budgets:
        try:
            budgets = [int(b) for b in args.budgets.split(",")]
        except ValueError:
            raise UsageError(f"--budgets must be comma-separated integers, got {args.budgets!r}")
    if args.strategies:
        names = args.strategies.split(",")
        unknown = [s for s in names if s not in _LB_STRATEGIES]
        if unknown:
            raise UsageError(
                f"unknown strategies {unknown}; choose from {sorted(_LB_STRATEGIES)}"
            )
        strategies = [
            _LB_STRATEGIES[s](epsilon) if s == "truncated-sampler" else _LB_STRATEGIES[s]()
            for s in names
        ]
    else:
        strategies = [
            TruncatedSamplerStrategy(epsilon),
            GreedyPairStrategy(),
            BlindGuessStrategy(),
        ]
    runs = run_lower_bound(
        args.generate, strategies, budgets, args.trials, seed=seed, base_seed=seed
    )
    rows = sorted(runs, key=lambda r: (r.strategy, r.budget))
    if args.plot_data:
        print("# budget witness_rate clique_hit_rate tv_lower_estimate strategy")
        for r in rows:
            print(
                f"{r.budget} {r.witness_rate:.12g} {r.clique_hit_rate:.12g} "
                f"{r.tv_lower_estimate:.12g} {r.strategy}"
            )
    else:
        print(_LB_COLUMNS)
        for r in rows:
            envelope = min(1.0, 4.0 * r.k * r.budget / r.n)
            print(
                f"{r.base_spec},{r.n},{r.m_dir},{r.k},{r.e_k_dir},{r.budget},"
                f"{r.strategy},{r.trials},{r.clique_hit_rate:.12g},"
                f"{r.witness_rate:.12g},{r.return_rate:.12g},"
                f"{r.tv_lower_estimate:.12g},{envelope:.12g}"
            )
    _emit(
        {
            "rows": len(rows),
            "k": rows[0].k if rows else None,
            "e_k_over_m": rows[0].e_k_dir / rows[0].m_dir if rows else None,
            "config": {
                "command": "lb",
                "base_spec": args.generate,
                "epsilon": epsilon,
                "trials": args.trials,
                "budgets": budgets,
                "strategies": [s.name for s in strategies],
                "seed": seed,
            },
        },
        stream=sys.stderr,
    )
    return EXIT_OK


def _cmd_gen(args) -> int:
    seed = _resolve_seed(args)
    g = generate(args.generate, seed=seed)
    write_edge_list(g, args.out)
    _emit(
        {
            "out": args.out,
            "config": {"command": "gen", "spec": args.generate, "seed": seed},
            **_graph_summary(g),
        }
    )
    return EXIT_OK


_COMMANDS = {
    "sample": _cmd_sample,
    "estimate": _cmd_estimate,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "lb": _cmd_lb,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())
