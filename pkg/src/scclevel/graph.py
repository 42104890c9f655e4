"""Adjacency-list directed graph with insertion-ordered neighbors."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


class OutOfRange(IndexError):
    """A vertex id outside ``[0, vertex_count)``."""


class DirectedGraph:
    """Directed multigraph on vertices ``0 .. vertex_count - 1``.

    Duplicate edges and self-loops are kept as given. Neighbor sequences
    preserve insertion order, which every consumer iterates in.
    """

    __slots__ = ("vertex_count", "adjacency", "edge_count")

    def __init__(self, vertex_count: int = 0) -> None:
        if vertex_count < 0:
            raise ValueError(f"vertex_count must be non-negative, got {vertex_count}")
        self.vertex_count = vertex_count
        self.adjacency: list[list[int]] = [[] for _ in range(vertex_count)]
        self.edge_count = 0

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> DirectedGraph:
        g = cls(vertex_count)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def _check(self, u: int) -> None:
        if not 0 <= u < self.vertex_count:
            raise OutOfRange(f"vertex {u} not in [0, {self.vertex_count})")

    def add_edge(self, u: int, v: int) -> DirectedGraph:
        self._check(u)
        self._check(v)
        self.adjacency[u].append(v)
        self.edge_count += 1
        return self

    def neighbors(self, u: int) -> list[int]:
        """Out-neighbors of ``u`` in insertion order (the live list, not a copy)."""
        self._check(u)
        return self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                yield u, v

    def relabeled(self, perm: list[int]) -> DirectedGraph:
        """Image of this graph under the vertex mapping ``u -> perm[u]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("perm must be a permutation of the vertex ids")
        return DirectedGraph.from_edges(
            self.vertex_count, ((perm[u], perm[v]) for u, v in self.edges())
        )

    def __repr__(self) -> str:
        return f"DirectedGraph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"


def new_graph(vertex_count: int) -> DirectedGraph:
    return DirectedGraph(vertex_count)


def add_edge(g: DirectedGraph, u: int, v: int) -> DirectedGraph:
    return g.add_edge(u, v)


def neighbors(g: DirectedGraph, u: int) -> list[int]:
    return g.neighbors(u)
