"""Single-pass SCC computation over a level-augmented union-find.

A depth-first traversal tags each vertex with its stack depth (root = 1).
Each union-find set remembers the shallowest depth of its members still on
the stack. When a neighbor's set has a member strictly shallower than the
current vertex, the two sets lie on a common cycle and are merged. When the
shallowest stacked member of a set is popped, the set's depth goes back to
infinity.

The traversal uses an explicit frame stack, so path length is not bounded
by the interpreter's recursion limit.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .counters import OpCounters
from .dsu import AugmentedDisjointSet
from .graph import DirectedGraph


@dataclass(slots=True)
class DfsFrame:
    vertex: int
    level: int
    next_neighbor: int = 0
    # set while the neighbor at next_neighbor is being explored as a child
    awaiting_child: bool = False


@dataclass(frozen=True)
class SccPartition:
    """SCC partition in canonical form.

    Components are ordered by their smallest member and members ascend.
    """

    component_count: int
    component_of: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> SccPartition:
        """Canonicalize an arbitrary per-vertex labelling of the blocks."""
        index: dict[int, int] = {}
        component_of = []
        members: list[list[int]] = []
        for v, label in enumerate(labels):
            c = index.get(label)
            if c is None:
                c = index[label] = len(members)
                members.append([])
            component_of.append(c)
            members[c].append(v)
        return cls(len(members), tuple(component_of), tuple(map(tuple, members)))

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[Sequence[int]]) -> SccPartition:
        labels = [-1] * n
        for i, block in enumerate(blocks):
            for v in block:
                if labels[v] != -1:
                    raise ValueError(f"vertex {v} appears in more than one block")
                labels[v] = i
        if -1 in labels:
            raise ValueError(f"vertex {labels.index(-1)} is in no block")
        return cls.from_labels(labels)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(m) for m in self.members}

    def same_component(self, u: int, v: int) -> bool:
        return self.component_of[u] == self.component_of[v]


StepHook = Callable[[AugmentedDisjointSet, list[DfsFrame]], None]


def dfs_visit(
    g: DirectedGraph,
    ds: AugmentedDisjointSet,
    visited: list[bool],
    start: int,
    counters: OpCounters | None = None,
    on_step: StepHook | None = None,
) -> None:
    """Traverse everything reachable from ``start``, merging SCCs in ``ds``.

    ``on_step(ds, stack)``, if given, runs each time a neighbor is about to
    be processed. It may inspect but must not modify the stack.
    """
    adjacency = g.adjacency
    stack: list[DfsFrame] = []

    def enter(v: int, level: int) -> None:
        ds.lower_min_level(v, level)
        visited[v] = True
        stack.append(DfsFrame(v, level))
        if counters is not None:
            counters.dfs_pushes += 1

    def merge_check(v: int, w: int, level: int) -> None:
        if counters is not None:
            counters.merge_checks += 1
        if ds.min_level_of(w) < level:
            ds.union_components(v, w)

    enter(start, 1)
    while stack:
        frame = stack[-1]
        v, level = frame.vertex, frame.level
        nbrs = adjacency[v]
        i = frame.next_neighbor
        if frame.awaiting_child:
            # child at nbrs[i] just finished; same check as for a visited neighbor
            frame.awaiting_child = False
            merge_check(v, nbrs[i], level)
            i += 1
        descended = False
        while i < len(nbrs):
            w = nbrs[i]
            if on_step is not None:
                on_step(ds, stack)
            if not visited[w]:
                frame.next_neighbor = i
                frame.awaiting_child = True
                enter(w, level + 1)
                descended = True
                break
            merge_check(v, w, level)
            i += 1
        if descended:
            continue
        frame.next_neighbor = i
        ds.reset_level_if_owner(v, level)
        stack.pop()


def assemble_partition(ds: AugmentedDisjointSet, n: int) -> SccPartition:
    """Number sets by first appearance in an ascending vertex scan."""
    count = sum(1 for v in range(n) if ds.parent[v] == v)
    index: dict[int, int] = {}
    component_of = []
    members: list[list[int]] = []
    for v in range(n):
        root = ds.find(v)
        c = index.get(root)
        if c is None:
            c = index[root] = len(members)
            members.append([])
        component_of.append(c)
        members[c].append(v)
    assert count == len(members)
    return SccPartition(count, tuple(component_of), tuple(map(tuple, members)))


def solve(
    g: DirectedGraph,
    counters: OpCounters | None = None,
    on_step: StepHook | None = None,
) -> SccPartition:
    """Strongly connected components of ``g`` in canonical form."""
    n = g.vertex_count
    ds = AugmentedDisjointSet(n, counters)
    visited = [False] * n
    for v in range(n):
        if not visited[v]:
            dfs_visit(g, ds, visited, v, counters, on_step)
    return assemble_partition(ds, n)
