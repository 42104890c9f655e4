"""Seeded graph generators and the operation-counting benchmark harness."""

from __future__ import annotations

import dataclasses
import random
import time
from dataclasses import dataclass

from .counters import OpCounters
from .graph import DirectedGraph
from .solver import solve

KINDS = ("random", "cycle", "path", "dag", "cycle_chain")

# positional parameters each generator kind takes after its name
KIND_PARAMS = {
    "random": ("n", "m"),
    "cycle": ("n",),
    "path": ("n",),
    "dag": ("n", "m"),
    "cycle_chain": ("n", "k"),
}

REPORT_FIELDS = (
    "kind", "n", "m", "seed", "wall_ns",
    "find_links", "unions", "checks", "pushes",
)


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    n: int
    m: int = 0
    k: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise InvalidSpec(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")
        if self.n < 0 or self.m < 0:
            raise InvalidSpec(f"n and m must be non-negative, got n={self.n} m={self.m}")
        if self.kind == "random" and self.m > 0 and self.n == 0:
            raise InvalidSpec("random graph with edges needs at least one vertex")
        if self.kind == "dag" and self.m > 0 and self.n < 2:
            raise InvalidSpec("dag with edges needs at least two vertices")
        if self.kind == "cycle" and self.n < 1:
            raise InvalidSpec("cycle needs at least one vertex")
        if self.kind == "cycle_chain":
            if self.k < 1 or self.n < self.k or self.n % self.k:
                raise InvalidSpec(f"cycle_chain needs 1 <= k <= n with k | n, got n={self.n} k={self.k}")

    @classmethod
    def from_params(cls, kind: str, params: list[int], seed: int = 0) -> GeneratorSpec:
        if kind not in KIND_PARAMS:
            raise InvalidSpec(f"unknown generator kind {kind!r}; expected one of {KINDS}")
        names = KIND_PARAMS[kind]
        if len(params) != len(names):
            raise InvalidSpec(f"{kind} takes {len(names)} parameter(s) ({' '.join(names)}), got {len(params)}")
        spec = cls(kind, seed=seed, **dict(zip(names, params)))
        spec.validate()
        return spec

    def with_seed(self, seed: int) -> GeneratorSpec:
        return dataclasses.replace(self, seed=seed)


def _cycle_edges(vertices: range) -> list[tuple[int, int]]:
    vs = list(vertices)
    return list(zip(vs, vs[1:] + vs[:1]))


def generate_graph(spec: GeneratorSpec) -> DirectedGraph:
    """Build the graph described by ``spec``; equal specs give equal graphs.

    * random(n, m): m ordered pairs drawn uniformly with replacement, so
      duplicates and self-loops occur.
    * cycle(n): 0 -> 1 -> ... -> n-1 -> 0.
    * path(n): 0 -> 1 -> ... -> n-1.
    * dag(n, m): m pairs drawn uniformly among u < v.
    * cycle_chain(n, k): k cycles of n/k consecutive ids, each linked to the
      next by one forward edge.
    """
    spec.validate()
    n, m = spec.n, spec.m
    rng = random.Random(spec.seed)
    g = DirectedGraph(n)
    if spec.kind == "random":
        edges = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
    elif spec.kind == "cycle":
        edges = _cycle_edges(range(n))
    elif spec.kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif spec.kind == "dag":
        edges = []
        for _ in range(m):
            u, v = rng.sample(range(n), 2)
            edges.append((u, v) if u < v else (v, u))
    else:
        size = n // spec.k
        edges = []
        for c in range(spec.k):
            edges.extend(_cycle_edges(range(c * size, (c + 1) * size)))
            if c + 1 < spec.k:
                edges.append((c * size, (c + 1) * size))
    for u, v in edges:
        g.adjacency[u].append(v)
    g.edge_count = len(edges)
    return g


@dataclass(frozen=True)
class BenchRecord:
    kind: str
    n: int
    m: int
    seed: int
    wall_ns: int
    counters: OpCounters
    component_count: int

    def report_line(self) -> str:
        c = self.counters
        fields = (
            self.kind, self.n, self.m, self.seed, self.wall_ns,
            c.find_link_traversals, c.unions_performed, c.merge_checks, c.dfs_pushes,
        )
        return "\t".join(map(str, fields))


def bench_once(spec: GeneratorSpec) -> BenchRecord:
    g = generate_graph(spec)
    counters = OpCounters()
    t0 = time.perf_counter_ns()
    partition = solve(g, counters)
    wall = time.perf_counter_ns() - t0
    return BenchRecord(spec.kind, g.vertex_count, g.edge_count, spec.seed, wall, counters,
                       partition.component_count)


def run_benchmark(spec: GeneratorSpec, repetitions: int = 1) -> list[BenchRecord]:
    """Solve ``repetitions`` instances; repetition ``r`` uses seed ``spec.seed + r``."""
    spec.validate()
    if repetitions < 1:
        raise InvalidSpec(f"repetitions must be positive, got {repetitions}")
    return [bench_once(spec.with_seed(spec.seed + r)) for r in range(repetitions)]
