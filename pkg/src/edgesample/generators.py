"""Deterministic test-graph generators and the ``kind:args`` spec grammar.

Every generator is a pure function of its parameters and seed. The
spec-string grammar is shell-friendly: ``path:8``, ``star:5``, ``er:1000,0.05``,
``clique_union:er:1000,0.05,30`` (the value after the last comma is the
clique size; everything before it is the base spec).
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, build_graph


def path(n: int) -> Graph:
    """Path on n vertices, edges (i, i+1)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def star(leaves: int) -> Graph:
    """Star with center 0 and ids 1..leaves as leaves."""
    if leaves < 1:
        raise ValueError(f"star needs >= 1 leaf, got {leaves}")
    return build_graph([(0, i) for i in range(1, leaves + 1)], leaves + 1)


def clique(k: int) -> Graph:
    """Complete graph on k vertices."""
    if k < 1:
        raise ValueError(f"clique needs k >= 1, got {k}")
    return build_graph([(i, j) for i in range(k) for j in range(i + 1, k)], k)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) random graph, deterministic under seed.

    Sampled as M ~ Binomial(C(n,2), p) followed by a uniform M-subset of the
    pair indices, which is distributed identically to independent Bernoulli
    trials per pair but runs in O(M) rather than O(n^2).
    """
    if n < 1:
        raise ValueError(f"erdos_renyi needs n >= 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    n_pairs = n * (n - 1) // 2
    m = int(rng.binomial(n_pairs, p)) if n_pairs > 0 else 0
    chosen = _sample_distinct(rng, n_pairs, m)
    # pairs (i, j), i < j, in lexicographic order; starts[i] = index of (i, i+1)
    starts = np.zeros(n, dtype=np.int64)
    if n > 1:
        starts[1:] = np.cumsum(np.arange(n - 1, 0, -1))
    i = np.searchsorted(starts, chosen, side="right") - 1
    j = chosen - starts[i] + i + 1
    edges = sorted(zip(i.tolist(), j.tolist()))
    return build_graph(edges, n)


def _sample_distinct(rng: np.random.Generator, n_total: int, m: int) -> np.ndarray:
    """m distinct uniform integers from [0, n_total), sorted."""
    if m == 0:
        return np.empty(0, dtype=np.int64)
    if m > n_total:
        raise ValueError(f"cannot draw {m} distinct values from {n_total}")
    if 3 * m >= n_total:
        return np.sort(rng.permutation(n_total)[:m])
    picked: set[int] = set()
    while len(picked) < m:
        batch = rng.integers(0, n_total, size=int(1.2 * (m - len(picked))) + 8)
        picked.update(batch.tolist())
        if len(picked) > m:
            drop = rng.permutation(sorted(picked))[: len(picked) - m]
            picked.difference_update(drop.tolist())
    return np.sort(np.fromiter(picked, dtype=np.int64, count=m))


def clique_union(base: Graph, k: int, seed: int) -> Graph:
    """Disjoint union of ``base`` and a k-clique, with all ids relabeled
    by a uniformly random permutation drawn from ``seed``."""
    if k < 1:
        raise ValueError(f"clique size must be >= 1, got {k}")
    n = base.n + k
    edges = list(base.undirected_edges())
    edges += [(base.n + i, base.n + j) for i in range(k) for j in range(i + 1, k)]
    perm = np.random.default_rng(seed).permutation(n)
    return build_graph([(int(perm[u]), int(perm[v])) for u, v in edges], n)


def generate(spec: str, seed: int = 0) -> Graph:
    """Build a graph from a ``kind:args`` spec string.

    Kinds: ``path:n``, ``cycle:n``, ``star:leaves``, ``clique:k``,
    ``er:n,p`` (alias ``erdos_renyi``), and ``clique_union:<base spec>,k``.
    """
    kind, _, rest = spec.partition(":")
    kind = kind.strip()
    try:
        if kind == "path":
            return path(int(rest))
        if kind == "cycle":
            return cycle(int(rest))
        if kind == "star":
            return star(int(rest))
        if kind == "clique":
            return clique(int(rest))
        if kind in ("er", "erdos_renyi"):
            n_str, p_str = rest.split(",")
            return erdos_renyi(int(n_str), float(p_str), seed)
        if kind == "clique_union":
            base_spec, _, k_str = rest.rpartition(",")
            if not base_spec:
                raise ValueError("clique_union needs a base spec and a clique size")
            base = generate(base_spec, seed)
            return clique_union(base, int(k_str), seed + 1)
    except ValueError as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown generator kind {kind!r} in spec {spec!r}")
