"""Metered query access to a graph: the only path samplers may use.

Four query types, each bumping its own counter exactly once per call:

1. ``random_vertex()``: a uniformly random vertex id.
2. ``degree(v)``: d(v).
3. ``neighbor(v, i)``: the i-th neighbor of v (1-based), or None when
   i > d(v). The None is a legitimate answer, not an error.
4. ``pair(v, w)``: whether (v, w) is an edge. Provided for the
   budget-vs-accuracy experiments; the sampler itself never calls it.

The vertex count ``n`` is public knowledge and free. Out-of-range vertex
ids are programmer errors (IndexError), not query failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


class BudgetExceeded(RuntimeError):
    """A query was attempted past the oracle's hard query budget."""


@dataclass
class QueryCounts:
    """Per-type query counters; merged across workers by addition."""

    vertex: int = 0
    degree: int = 0
    neighbor: int = 0
    pair: int = 0

    @property
    def total(self) -> int:
        return self.vertex + self.degree + self.neighbor + self.pair

    def __add__(self, other: "QueryCounts") -> "QueryCounts":
        return QueryCounts(
            vertex=self.vertex + other.vertex,
            degree=self.degree + other.degree,
            neighbor=self.neighbor + other.neighbor,
            pair=self.pair + other.pair,
        )

    def __sub__(self, other: "QueryCounts") -> "QueryCounts":
        return QueryCounts(
            vertex=self.vertex - other.vertex,
            degree=self.degree - other.degree,
            neighbor=self.neighbor - other.neighbor,
            pair=self.pair - other.pair,
        )

    def copy(self) -> "QueryCounts":
        return QueryCounts(self.vertex, self.degree, self.neighbor, self.pair)

    def as_dict(self) -> dict[str, int]:
        return {
            "vertex": self.vertex,
            "degree": self.degree,
            "neighbor": self.neighbor,
            "pair": self.pair,
            "total": self.total,
        }


class QueryOracle:
    """Single-stream metered facade over an immutable graph.

    All randomness of a run (vertex queries plus any sampler coins drawn
    from ``oracle.rng``) comes from one seeded ``random.Random``, so a run
    replays bit-for-bit under the same seed. ``budget``, when set, is a
    hard cap on the total query count: the call that would exceed it
    raises BudgetExceeded before touching the graph.
    """

    def __init__(self, graph, seed: int | None = None, budget: int | None = None):
        self.graph = graph
        self.rng = random.Random(seed)
        self.counts = QueryCounts()
        self.budget = budget

    @property
    def n(self) -> int:
        return self.graph.n

    def _charge(self) -> None:
        if self.budget is not None and self.counts.total >= self.budget:
            raise BudgetExceeded(f"query budget {self.budget} exhausted")

    def random_vertex(self) -> int:
        self._charge()
        self.counts.vertex += 1
        return self.rng.randrange(self.graph.n)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.graph.n:
            raise IndexError(f"vertex {v} out of range for n={self.graph.n}")
        self._charge()
        self.counts.degree += 1
        return self.graph.degree(v)

    def neighbor(self, v: int, i: int) -> int | None:
        if not 0 <= v < self.graph.n:
            raise IndexError(f"vertex {v} out of range for n={self.graph.n}")
        if i < 1:
            raise ValueError(f"neighbor index must be >= 1, got {i}")
        self._charge()
        self.counts.neighbor += 1
        return self.graph.neighbor(v, i)

    def pair(self, v: int, w: int) -> bool:
        for x in (v, w):
            if not 0 <= x < self.graph.n:
                raise IndexError(f"vertex {x} out of range for n={self.graph.n}")
        self._charge()
        self.counts.pair += 1
        return self.graph.has_edge(v, w)
