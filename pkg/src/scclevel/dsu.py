"""Union-find over vertices, augmented with a per-set minimum DFS level.

Union by height, full two-pass path compression. Each root additionally
stores the smallest DFS stack level among the set's vertices that are
currently on the traversal stack, or ``sentinel_level`` when none are.
"""

from __future__ import annotations

from collections.abc import Sequence

from .counters import OpCounters
from .graph import OutOfRange


class AugmentedDisjointSet:
    __slots__ = ("parent", "height", "min_level", "sentinel_level", "counters")

    def __init__(self, n: int, counters: OpCounters | None = None) -> None:
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        self.parent = list(range(n))
        self.height = [0] * n
        # levels never exceed n, so n + 1 acts as infinity
        self.sentinel_level = n + 1
        self.min_level = [self.sentinel_level] * n
        self.counters = counters

    @classmethod
    def from_parents(
        cls, parents: Sequence[int], counters: OpCounters | None = None
    ) -> AugmentedDisjointSet:
        """Build a structure with an arbitrary parent forest. Testing aid.

        Heights are left at zero and min levels at the sentinel.
        """
        n = len(parents)
        for p in parents:
            if not 0 <= p < n:
                raise OutOfRange(f"parent {p} not in [0, {n})")
        # every walk must end at a self-loop within n steps
        for start in range(n):
            x, steps = start, 0
            while parents[x] != x:
                x = parents[x]
                steps += 1
                if steps > n:
                    raise ValueError(f"parent links from {start} contain a cycle")
        ds = cls(n, counters)
        ds.parent = list(parents)
        return ds

    def __len__(self) -> int:
        return len(self.parent)

    def _check(self, x: int) -> None:
        if not 0 <= x < len(self.parent):
            raise OutOfRange(f"element {x} not in [0, {len(self.parent)})")

    def _root(self, x: int) -> int:
        parent = self.parent
        root = x
        hops = 0
        while parent[root] != root:
            root = parent[root]
            hops += 1
        while x != root:
            parent[x], x = root, parent[x]
        if self.counters is not None:
            self.counters.find_link_traversals += hops
        return root

    def find(self, x: int) -> int:
        """Root of ``x``'s set; every vertex on the path is relinked to the root."""
        self._check(x)
        return self._root(x)

    def union_components(self, x: int, y: int) -> bool:
        """Merge the sets of ``x`` and ``y``. Returns False if already merged.

        The taller root survives; on a tie ``x``'s root survives and grows
        by one. The survivor keeps the smaller of the two min levels.
        """
        self._check(x)
        self._check(y)
        rx = self._root(x)
        ry = self._root(y)
        if rx == ry:
            return False
        height = self.height
        if height[rx] < height[ry]:
            rx, ry = ry, rx
        if height[rx] == height[ry]:
            height[rx] += 1
        self.parent[ry] = rx
        if self.min_level[ry] < self.min_level[rx]:
            self.min_level[rx] = self.min_level[ry]
        if self.counters is not None:
            self.counters.unions_performed += 1
        return True

    def min_level_of(self, x: int) -> int:
        self._check(x)
        return self.min_level[self._root(x)]

    def lower_min_level(self, x: int, level: int) -> None:
        self._check(x)
        if level >= self.sentinel_level:
            raise ValueError(f"level {level} is not finite (sentinel {self.sentinel_level})")
        r = self._root(x)
        if level < self.min_level[r]:
            self.min_level[r] = level

    def reset_level_if_owner(self, x: int, level: int) -> bool:
        """Clear the set's min level back to the sentinel if it equals ``level``."""
        self._check(x)
        r = self._root(x)
        if self.min_level[r] == level:
            self.min_level[r] = self.sentinel_level
            return True
        return False

    def is_root(self, x: int) -> bool:
        self._check(x)
        return self.parent[x] == x

    def roots(self) -> list[int]:
        return [i for i, p in enumerate(self.parent) if i == p]


def make_sets(n: int, counters: OpCounters | None = None) -> AugmentedDisjointSet:
    return AugmentedDisjointSet(n, counters)


def find(ds: AugmentedDisjointSet, x: int) -> int:
    return ds.find(x)


def union_components(ds: AugmentedDisjointSet, x: int, y: int) -> None:
    ds.union_components(x, y)


def min_level_of(ds: AugmentedDisjointSet, x: int) -> int:
    return ds.min_level_of(x)


def lower_min_level(ds: AugmentedDisjointSet, x: int, level: int) -> None:
    ds.lower_min_level(x, level)


def reset_level_if_owner(ds: AugmentedDisjointSet, x: int, level: int) -> bool:
    return ds.reset_level_if_owner(x, level)
