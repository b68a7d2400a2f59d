"""Measure how the query cost scales with graph size.

A full sampling run should cost about n / sqrt(eps * m) queries: attempts
succeed with probability about sqrt(eps * m) / n and each attempt costs a
constant number of queries. This script measures mean cost over an
Erdős–Rényi family with constant average degree and fits the log-log
slope, which should sit near 1.
"""

from edgesample.experiments import run_scaling

sizes = [512, 1024, 2048, 4096]
specs = [f"er:{n},{16 / n}" for n in sizes]

result = run_scaling(specs, epsilon=0.25, trials=100, seed=42, estimator="exact")

print("      n    m_dir   n/sqrt(eps m)   mean queries   failures")
for run in result.runs:
    print(
        f"{run.n:7d} {run.m_dir:8d} {run.cost_scale:14.1f} "
        f"{run.mean_queries:14.1f} {run.failure_rate:10.2%}"
    )

print(f"\nlog-log slope: {result.slope:.3f} (1.0 means cost tracks n/sqrt(eps m))")

# Halving epsilon demands a sqrt(2)-times larger query bill on a fixed graph.
spec = ["er:1024,0.015625"]
wide = run_scaling(spec, epsilon=0.5 - 1e-9, trials=300, seed=1).runs[0]
tight = run_scaling(spec, epsilon=0.25, trials=300, seed=2).runs[0]
print(
    f"\nsame graph, eps 0.5 -> 0.25: mean queries "
    f"{wide.mean_queries:.0f} -> {tight.mean_queries:.0f} "
    f"(ratio {tight.mean_queries / wide.mean_queries:.2f}, sqrt(2) = 1.41)"
)
