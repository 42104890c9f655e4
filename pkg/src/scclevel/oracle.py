"""Reference SCC computations for differential testing.

Neither function shares code with the union-find solver.
"""

from __future__ import annotations

from collections import deque

from .graph import DirectedGraph
from .solver import SccPartition


def reachable_from(g: DirectedGraph, source: int) -> set[int]:
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def reachability_partition(g: DirectedGraph) -> SccPartition:
    """Group vertices by mutual reachability. Quadratic; meant for small graphs."""
    n = g.vertex_count
    reach = [reachable_from(g, u) for u in range(n)]
    labels = [-1] * n
    for u in range(n):
        if labels[u] != -1:
            continue
        labels[u] = u
        for v in reach[u]:
            if v > u and u in reach[v]:
                labels[v] = u
    return SccPartition.from_labels(labels)


def tarjan_scc(g: DirectedGraph) -> SccPartition:
    """Tarjan's index/lowlink algorithm with an explicit call stack."""
    n = g.vertex_count
    adjacency = g.adjacency
    index = [-1] * n
    lowlink = [0] * n
    on_stack = [False] * n
    labels = [-1] * n
    scc_stack: list[int] = []
    counter = 0
    n_sccs = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = lowlink[root] = counter
        counter += 1
        scc_stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            nbrs = adjacency[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if index[w] == -1:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    scc_stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < lowlink[v]:
                    lowlink[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if lowlink[v] < lowlink[parent]:
                    lowlink[parent] = lowlink[v]
            if lowlink[v] == index[v]:
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = False
                    labels[w] = n_sccs
                    if w == v:
                        break
                n_sccs += 1
    return SccPartition.from_labels(labels)
