"""Reductions from temporal colouring to static colouring.

``to_static`` builds the layered graph whose chromatic number equals the
temporal chromatic number. ``to_col2`` contracts each vertex's stretches of
forced-constant colour into single nodes; the result is bipartite exactly
when the temporal graph is temporally 2-colourable.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .coloring import ColoringSeq
from .graph import StaticGraph, TemporalGraph, is_bipartite, smash


@dataclass(frozen=True)
class StaticReduction:
    """Layered graph on ``n*T`` vertices; ``(v, t)`` sits at ``(t-1)*n + v``."""

    graph: StaticGraph
    n: int
    T: int

    def flat(self, v: int, t: int) -> int:
        return (t - 1) * self.n + v

    def unflat(self, x: int) -> tuple[int, int]:
        t, v = divmod(x, self.n)
        return v, t + 1

    def lift(self, seq: ColoringSeq) -> tuple[int, ...]:
        """Flatten a colouring sequence onto the layered vertices."""
        return tuple(x for c in seq.per_time for x in c)

    def lower(self, coloring, palette_size: int) -> ColoringSeq:
        """Cut a flat colouring back into one colouring per time."""
        n = self.n
        return ColoringSeq(
            tuple(tuple(coloring[t * n : (t + 1) * n]) for t in range(self.T)), palette_size
        )


def to_static(g: TemporalGraph) -> StaticReduction:
    n, T = g.n, g.T
    edges = set()
    for t in range(1, T + 1):
        base = (t - 1) * n
        for u, v in smash(g, t, 1).edges:
            edges.add((base + u, base + v))
        if t < T:
            for u, v in g.edges_at(t) | g.edges_at(t + 1):
                edges.add((base + u, base + n + v))
                edges.add((base + v, base + n + u))
    return StaticReduction(StaticGraph(n * T, edges), n, T)


@dataclass(frozen=True)
class Col2Reduction:
    """Contraction graph for the 2-colourability test.

    ``nodes[i] = (v, start)``; node ``i`` stands for vertex ``v`` on the time
    interval ``intervals[i] = (start, stop)``, half-open. Nodes are sorted by
    vertex, then start time.
    """

    graph: StaticGraph
    nodes: tuple[tuple[int, int], ...]
    intervals: tuple[tuple[int, int], ...]

    def node_at(self, v: int, t: int) -> int:
        """Index of the node covering vertex ``v`` at time ``t``."""
        # every vertex owns a node starting at time 1
        return bisect_right(self.nodes, (v, t)) - 1


def change_times(g: TemporalGraph, v: int) -> list[int]:
    """Times at which ``v`` may switch colour in a temporal 2-colouring.

    Time 1 always opens an interval; any later ``t`` with ``v`` isolated in
    both ``G_{t-1}`` and ``G_t`` opens another.
    """
    busy = [any(v in e for e in g.edges_at(t)) for t in range(g.T + 1)]
    return [1] + [t for t in range(2, g.T + 1) if not busy[t] and not busy[t - 1]]


def to_col2(g: TemporalGraph) -> Col2Reduction:
    if g.n == 0:
        return Col2Reduction(StaticGraph(0), (), ())
    nodes: list[tuple[int, int]] = []
    intervals: list[tuple[int, int]] = []
    for v in range(g.n):
        starts = change_times(g, v)
        for a, b in zip(starts, starts[1:] + [g.T + 1]):
            nodes.append((v, a))
            intervals.append((a, b))
    partial = Col2Reduction(StaticGraph(len(nodes)), tuple(nodes), tuple(intervals))
    edges = set()
    for t in range(1, g.T + 1):
        for u, v in g.edges_at(t):
            edges.add((partial.node_at(u, t), partial.node_at(v, t)))
    return Col2Reduction(StaticGraph(len(nodes), edges), tuple(nodes), tuple(intervals))


def decide_2colorable(g: TemporalGraph) -> tuple[bool, ColoringSeq | None]:
    """Decide temporal 2-colourability; on success also return a witness."""
    col = to_col2(g)
    parts = is_bipartite(col.graph)
    if parts is None:
        return False, None
    side_one = parts[1]
    per_time = tuple(
        tuple(1 if col.node_at(v, t) in side_one else 0 for v in range(g.n))
        for t in range(1, g.T + 1)
    )
    return True, ColoringSeq(per_time, 2)
