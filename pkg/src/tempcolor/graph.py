"""Static and temporal graph values and their structural queries.

Vertices are the dense integers ``0..n-1``. Edges are stored as ``(u, v)``
pairs with ``u < v``. Time indices are 1-based everywhere in the public API,
matching the usual ``G_1 .. G_T`` notation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ContractError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _normalize_edges(n: int, edges: Iterable[Sequence[int]]) -> frozenset[Edge]:
    out = set()
    for e in edges:
        u, v = e
        u, v = int(u), int(v)
        if u == v:
            raise ContractError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ContractError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        out.add(normalize_edge(u, v))
    return frozenset(out)


@dataclass(frozen=True)
class StaticGraph:
    """A simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ContractError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets."""
        out = [0] * self.n
        for u, v in self.edges:
            out[u] |= 1 << v
            out[v] |= 1 << u
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __or__(self, other: StaticGraph) -> StaticGraph:
        if self.n != other.n:
            raise ContractError("union of graphs on different vertex sets")
        return StaticGraph(self.n, self.edges | other.edges)

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    @classmethod
    def complete(cls, n: int) -> StaticGraph:
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@dataclass(frozen=True)
class TemporalGraph:
    """A fixed vertex set with one edge set per time step ``1..T``."""

    n: int
    snapshots: tuple[frozenset[Edge], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ContractError("vertex count must be non-negative")
        snaps = tuple(_normalize_edges(self.n, s) for s in self.snapshots)
        if not snaps:
            raise ContractError("a temporal graph needs lifetime T >= 1")
        object.__setattr__(self, "snapshots", snaps)

    @property
    def T(self) -> int:
        return len(self.snapshots)

    def edges_at(self, t: int) -> frozenset[Edge]:
        """Edge set at time ``t``; empty outside ``1..T``."""
        if 1 <= t <= self.T:
            return self.snapshots[t - 1]
        return frozenset()

    @classmethod
    def from_static(cls, graphs: Sequence[StaticGraph]) -> TemporalGraph:
        if not graphs:
            raise ContractError("a temporal graph needs lifetime T >= 1")
        n = graphs[0].n
        if any(g.n != n for g in graphs):
            raise ContractError("snapshots must share one vertex set")
        return cls(n, tuple(g.edges for g in graphs))

    def reversed(self) -> TemporalGraph:
        return TemporalGraph(self.n, self.snapshots[::-1])

    def relabel(self, perm: Sequence[int]) -> TemporalGraph:
        """Apply the vertex map ``v -> perm[v]`` uniformly across time."""
        return TemporalGraph(
            self.n, tuple(frozenset(normalize_edge(perm[u], perm[v]) for u, v in s) for s in self.snapshots)
        )


def _check_time(g: TemporalGraph, i: int) -> None:
    if not 1 <= i <= g.T:
        raise IndexError(f"time index {i} outside 1..{g.T}")


def snapshot(g: TemporalGraph, i: int) -> StaticGraph:
    _check_time(g, i)
    return StaticGraph(g.n, g.snapshots[i - 1])


def smash(g: TemporalGraph, i: int, radius: int = 1) -> StaticGraph:
    """Union of the snapshots ``i-radius .. i+radius``, clipped to ``1..T``."""
    _check_time(g, i)
    if radius < 0:
        raise ContractError("smash radius must be non-negative")
    edges: set[Edge] = set()
    for t in range(max(1, i - radius), min(g.T, i + radius) + 1):
        edges |= g.snapshots[t - 1]
    return StaticGraph(g.n, frozenset(edges))


def grow_pace(g: TemporalGraph) -> int:
    pace = 0
    for a, b in zip(g.snapshots, g.snapshots[1:]):
        pace = max(pace, len(b - a), len(a - b))
    return pace


def max_degree(s: StaticGraph) -> int:
    return max((len(a) for a in s.adjacency), default=0)


def is_bipartite(s: StaticGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colour each component by BFS from its smallest vertex.

    Returns the two sides, or ``None`` when some component has an odd cycle.
    """
    side = [-1] * s.n
    adj = s.adjacency
    for root in range(s.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return (
        frozenset(v for v in range(s.n) if side[v] == 0),
        frozenset(v for v in range(s.n) if side[v] == 1),
    )


def degeneracy(s: StaticGraph) -> tuple[int, list[int]]:
    """Peel minimum-degree vertices (ties to the smallest index).

    The removal order is the witness: every vertex has at most ``d``
    neighbours that come after it.
    """
    adj = s.adjacency
    alive = set(range(s.n))
    deg = [len(a) for a in adj]
    order: list[int] = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive.remove(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return d, order


def later_neighbour_count(s: StaticGraph, order: Sequence[int]) -> int:
    """Largest number of neighbours any vertex has after itself in ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    return max((sum(1 for w in s.adjacency[v] if pos[w] > pos[v]) for v in order), default=0)


def is_forest(s: StaticGraph) -> bool:
    parent = list(range(s.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in s.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_connected(s: StaticGraph) -> bool:
    if s.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in s.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == s.n


def is_path(s: StaticGraph) -> bool:
    """A spanning path: connected, acyclic, maximum degree at most 2."""
    return is_connected(s) and is_forest(s) and max_degree(s) <= 2
