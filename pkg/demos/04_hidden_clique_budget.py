"""Why n/sqrt(m) queries are genuinely necessary, not just sufficient.

Plant a clique holding half the edges inside a sparse graph and relabel
all vertex ids randomly each trial. Until some query touches the clique
(a witness), its location is information-theoretically hidden, so a
low-budget strategy must return clique edges far less often than the half
share a uniform sampler would give them. Observed clique-hit rates below
1/2 certify a lower bound on the total variational distance from uniform:
TV >= 1/2 - hit rate.

The experiment sweeps query budgets around n/sqrt(m) and shows the
transition: below it every strategy is blind; above it the mixture
sampler reaches its almost-uniform share.
"""

import math

from edgesample.experiments import clique_size_for, planted_union, run_lower_bound
from edgesample.generators import generate

base_spec = "er:800,0.02"
base = generate(base_spec, seed=3)
k = clique_size_for(base)
union, _ = planted_union(base, k)
n, m = union.n, union.m_dir
share = k * (k - 1) / m
print(f"base {base_spec}: planted K_{k}; union n={n}, m={m}, clique share {share:.3f}")

scale = n / math.sqrt(m)
budgets = sorted({max(1, math.ceil(scale * f)) for f in (0.01, 0.1, 1, 10, 40)})
print(f"n/sqrt(m) = {scale:.1f}; budgets swept: {budgets}\n")

runs = run_lower_bound(base_spec, budgets=budgets, trials=400, seed=11, base_seed=3)

print("strategy           budget   witness   returned   clique-hit   TV lower bound")
for r in runs:
    print(
        f"{r.strategy:18s} {r.budget:6d} {r.witness_rate:9.2%} "
        f"{r.return_rate:10.2%} {r.clique_hit_rate:12.3f} {r.tv_lower_estimate:16.3f}"
    )

print(
    "\nReading the table: with budgets well under n/sqrt(m), witness rates are"
    "\nnear zero and every strategy's returned edges miss the clique, so the"
    "\ncertified TV lower bound stays near 1/2. Only with ~10x n/sqrt(m)"
    f"\nqueries does the mixture sampler's hit rate approach the {share:.3f}"
    "\nshare an almost-uniform sampler must give the planted clique."
)
