"""Constructive temporal colourings with proven palette bounds.

Every algorithm is an :class:`OnlineStepper`: snapshots are fed one at a
time and ``c_i`` is emitted as soon as ``E_{i+1}`` has arrived, so no
colouring ever depends on snapshots beyond the next one. The batch functions
simply drive a stepper over a whole temporal graph.

Greedy choices always take the smallest colour id; vertex scans go by
increasing index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

from .coloring import Coloring, ColoringSeq, proper_violation
from .errors import ContractError, ShapeError
from .graph import Edge, StaticGraph, TemporalGraph, degeneracy, max_degree, normalize_edge

SnapshotColorer = Callable[[int, StaticGraph], Sequence[int]]


@dataclass(frozen=True)
class SnapshotColorings:
    """One proper colouring per snapshot, all within the palette ``0..k-1``."""

    per_time: tuple[Coloring, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "per_time", tuple(tuple(c) for c in self.per_time))
        if self.k < 1:
            raise ContractError("palette bound k must be positive")
        for t, c in enumerate(self.per_time, 1):
            if any(not 0 <= x < self.k for x in c):
                raise ContractError(f"x_{t} uses a colour outside 0..{self.k - 1}")

    @classmethod
    def build(cls, graphs: Sequence[StaticGraph], per_time, k: int) -> SnapshotColorings:
        xs = cls(tuple(per_time), k)
        xs.check(graphs)
        return xs

    def check(self, graphs: Sequence[StaticGraph]) -> None:
        if len(graphs) != len(self.per_time):
            raise ContractError(f"{len(self.per_time)} colourings for {len(graphs)} graphs")
        for t, (x, s) in enumerate(zip(self.per_time, graphs), 1):
            if len(x) != s.n:
                raise ContractError(f"x_{t} has {len(x)} entries for {s.n} vertices")
            bad = proper_violation(x, s)
            if bad is not None:
                raise ContractError(f"x_{t} is not proper: edge {bad}")


def greedy(s: StaticGraph, order: Iterable[int] | None = None, fixed: dict[int, int] | None = None) -> list[int]:
    """First-fit colouring in ``order`` (default: by index), keeping ``fixed``."""
    color = [-1] * s.n
    for v, c in (fixed or {}).items():
        color[v] = c
    for v in range(s.n) if order is None else order:
        if color[v] != -1:
            continue
        taken = {color[w] for w in s.adjacency[v]}
        c = 0
        while c in taken:
            c += 1
        color[v] = c
    return color


def _small_exact(s: StaticGraph, exact_limit: int) -> list[int]:
    from .exact import dsatur, solve_static

    if s.n <= exact_limit:
        return solve_static(s)[1]
    return dsatur(s)


def auto_colorer(exact_limit: int = 12) -> SnapshotColorer:
    """Colour each graph exactly when it has at most ``exact_limit`` vertices, else by DSATUR."""

    def color(_t: int, s: StaticGraph) -> list[int]:
        return _small_exact(s, exact_limit) if s.n else []

    return color


class OnlineStepper:
    """Base class: buffers snapshots and emits ``c_i`` once ``E_{i+1}`` is known.

    Subclasses implement :meth:`_next`, which sees only ``self.window`` (the
    snapshots fed so far) and the colourings already emitted. Not safe to
    share between threads.
    """

    palette_size: int

    def __init__(self, n: int):
        self.n = n
        self.window: list[StaticGraph] = []
        self.emitted: list[Coloring] = []
        self.closed = False

    def feed(self, edges: Iterable[Sequence[int]] | StaticGraph) -> Coloring | None:
        if self.closed:
            raise ContractError("stepper already closed")
        s = edges if isinstance(edges, StaticGraph) else StaticGraph(self.n, frozenset(map(tuple, edges)))
        if s.n != self.n:
            raise ContractError("snapshot has the wrong vertex count")
        self._accept(s)
        self.window.append(s)
        if len(self.window) >= 2:
            return self._emit()
        return None

    def close(self) -> Coloring:
        """Emit the final colouring ``c_T``."""
        if not self.window:
            raise ContractError("no snapshots were fed")
        if self.closed:
            raise ContractError("stepper already closed")
        self._finish()
        self.closed = True
        return self._emit()

    def _emit(self) -> Coloring:
        c = tuple(self._next(len(self.emitted) + 1))
        self.emitted.append(c)
        return c

    def edges(self, t: int) -> frozenset[Edge]:
        """``E_t`` from the window; empty outside what is known."""
        if 1 <= t <= len(self.window):
            return self.window[t - 1].edges
        return frozenset()

    def graph(self, *times: int) -> StaticGraph:
        out: frozenset[Edge] = frozenset()
        for t in times:
            out |= self.edges(t)
        return StaticGraph(self.n, out)

    def _accept(self, s: StaticGraph) -> None:
        """Check a new snapshot against the algorithm's preconditions."""

    def _finish(self) -> None:
        """Check whole-sequence preconditions before the last emission."""

    def _next(self, i: int) -> Sequence[int]:
        raise NotImplementedError

    def result(self) -> ColoringSeq:
        if not self.closed:
            raise ContractError("stepper not closed yet")
        return ColoringSeq(tuple(self.emitted), self.palette_size)


def run_stepper(stepper: OnlineStepper, g: TemporalGraph) -> ColoringSeq:
    for edges in g.snapshots:
        stepper.feed(StaticGraph(g.n, edges))
    stepper.close()
    return stepper.result()


# --- k^3 from per-snapshot colourings ------------------------------------------


class CubeStepper(OnlineStepper):
    """Colour ``v`` at time ``i`` by the triple of its snapshot colours at ``i-1, i, i+1``.

    The triple's coordinate order rotates with ``i mod 3`` so consecutive
    times keep ``x_i`` and ``x_{i+1}`` in shared positions. Missing
    neighbours at the ends repeat the boundary colouring.
    """

    def __init__(self, n: int, k: int, colorer: SnapshotColorer):
        super().__init__(n)
        self.k = k
        self.palette_size = k**3
        self.colorer = colorer
        self.xs: list[Coloring] = []

    def _accept(self, s: StaticGraph) -> None:
        t = len(self.window) + 1
        x = tuple(self.colorer(t, s))
        if len(x) != self.n or any(not 0 <= c < self.k for c in x):
            raise ContractError(f"x_{t} must map every vertex into 0..{self.k - 1}")
        bad = proper_violation(x, s)
        if bad is not None:
            raise ContractError(f"x_{t} is not proper on G_{t}: edge {bad}")
        self.xs.append(x)

    def _x(self, t: int) -> Coloring:
        return self.xs[min(max(t, 1), len(self.xs)) - 1]

    def _next(self, i: int) -> list[int]:
        prev, cur, nxt = self._x(i - 1), self._x(i), self._x(i + 1)
        r = i % 3
        if r == 0:
            triple = (cur, nxt, prev)
        elif r == 1:
            triple = (prev, cur, nxt)
        else:
            triple = (nxt, prev, cur)
        k = self.k
        a, b, c = triple
        return [(a[v] * k + b[v]) * k + c[v] for v in range(self.n)]


def color_cube(g: TemporalGraph, xs: SnapshotColorings) -> ColoringSeq:
    """Temporal colouring with ``k**3`` colours from proper ``k``-colourings of each snapshot."""
    snaps = [StaticGraph(g.n, e) for e in g.snapshots]
    xs.check(snaps)
    return run_stepper(CubeStepper(g.n, xs.k, lambda t, s: xs.per_time[t - 1]), g)


# --- 2k from smash colourings -----------------------------------------------------


class DoubleStepper(OnlineStepper):
    """Odd times use colours ``0..k-1``, even times ``k..2k-1``."""

    def __init__(self, n: int, k: int, colorer: SnapshotColorer):
        super().__init__(n)
        self.k = k
        self.palette_size = 2 * k
        self.colorer = colorer

    def _next(self, i: int) -> list[int]:
        s = self.graph(i - 1, i, i + 1)
        c = list(self.colorer(i, s))
        if len(c) != self.n or any(not 0 <= x < self.k for x in c):
            raise ContractError(f"smash coloring {i} must map every vertex into 0..{self.k - 1}")
        bad = proper_violation(c, s)
        if bad is not None:
            raise ContractError(f"smash coloring {i} is not proper on S_{i}: edge {bad}")
        shift = 0 if i % 2 else self.k
        return [x + shift for x in c]


def color_double(g: TemporalGraph, smash_colorings: Sequence[Sequence[int]], k: int) -> ColoringSeq:
    """Temporal colouring with ``2k`` colours from ``k``-colourings of every ``S_i``."""
    if len(smash_colorings) != g.T:
        raise ContractError(f"{len(smash_colorings)} smash colourings for lifetime {g.T}")
    if k < 1:
        raise ContractError("palette bound k must be positive")
    return run_stepper(DoubleStepper(g.n, k, lambda t, s: smash_colorings[t - 1]), g)


# --- k^2 on duplicated sequences --------------------------------------------------


class DuplicatedMixin:
    """Shape checks for sequences ``H_1, H_1, H_2, H_2, ...``."""

    window: list[StaticGraph]

    def _check_pair(self, s: StaticGraph) -> None:
        t = len(self.window) + 1
        if t % 2 == 0 and s.edges != self.window[-1].edges:
            raise ShapeError(f"G_{t} differs from G_{t - 1}; snapshots must come in equal pairs")

    def _check_even(self) -> None:
        if len(self.window) % 2:
            raise ShapeError("duplicated sequences need an even lifetime")


class DupSquareStepper(DuplicatedMixin, OnlineStepper):
    """Pairs ``(x_j, x_{j+1})`` of colourings of the distinct snapshots ``H_j``.

    The second copy of ``H_j`` gets the pair in order ``(x_j, x_{j+1})`` for
    even ``j`` and swapped for odd ``j``; the first copy repeats the previous
    pair. At time 1 the pair ``(x_1, x_1)`` stands in, since ``H_2`` is not
    known yet.
    """

    def __init__(self, n: int, k: int, colorer: SnapshotColorer):
        super().__init__(n)
        self.k = k
        self.palette_size = k * k
        self.colorer = colorer
        self.xs: list[Coloring] = []

    def _accept(self, s: StaticGraph) -> None:
        self._check_pair(s)
        t = len(self.window) + 1
        if t % 2:
            j = (t + 1) // 2
            x = tuple(self.colorer(j, s))
            if len(x) != self.n or any(not 0 <= c < self.k for c in x):
                raise ContractError(f"x_{j} must map every vertex into 0..{self.k - 1}")
            bad = proper_violation(x, s)
            if bad is not None:
                raise ContractError(f"x_{j} is not proper on H_{j}: edge {bad}")
            self.xs.append(x)

    def _finish(self) -> None:
        self._check_even()

    def _second(self, j: int) -> list[int]:
        cur = self.xs[j - 1]
        nxt = self.xs[min(j, len(self.xs) - 1)]
        first, second = (cur, nxt) if j % 2 == 0 else (nxt, cur)
        return [first[v] * self.k + second[v] for v in range(self.n)]

    def _next(self, i: int) -> list[int]:
        if i == 1:
            x = self.xs[0]
            return [x[v] * self.k + x[v] for v in range(self.n)]
        if i % 2 == 0:
            return self._second(i // 2)
        return list(self.emitted[-1])


def color_square_duplicated(g: TemporalGraph, xs: SnapshotColorings) -> ColoringSeq:
    """Temporal colouring with ``k**2`` colours when every snapshot appears twice in a row.

    ``xs`` colours the distinct snapshots ``H_1 .. H_{T/2}``.
    """
    check_duplicated(g)
    hs = [StaticGraph(g.n, g.snapshots[t]) for t in range(0, g.T, 2)]
    xs.check(hs)
    return run_stepper(DupSquareStepper(g.n, xs.k, lambda j, s: xs.per_time[j - 1]), g)


def check_duplicated(g: TemporalGraph) -> None:
    if g.T % 2:
        raise ShapeError("duplicated sequences need an even lifetime")
    for t in range(0, g.T, 2):
        if g.snapshots[t] != g.snapshots[t + 1]:
            raise ShapeError(f"G_{t + 2} differs from G_{t + 1}; snapshots must come in equal pairs")


# --- bounded degree: 5*delta + 1 via list colouring -----------------------------


class DegreeBoundMixin:
    delta: int

    def _check_degree(self, s: StaticGraph, t: int) -> None:
        if max_degree(s) > self.delta:
            raise ContractError(f"G_{t} has maximum degree {max_degree(s)} > {self.delta}")


class BoundedDegreeStepper(DegreeBoundMixin, OnlineStepper):
    """Each step list-colours the next smash from the colours compatible with the last step."""

    def __init__(self, n: int, delta: int):
        super().__init__(n)
        self.delta = delta
        self.palette_size = 5 * delta + 1

    def _accept(self, s: StaticGraph) -> None:
        self._check_degree(s, len(self.window) + 1)

    def _next(self, i: int) -> list[int]:
        if i == 1:
            # degree at most 2*delta here, so first fit stays below 2*delta + 1
            return greedy(self.graph(1, 2))
        prev = self.emitted[-1]
        link = self.graph(i - 1, i)
        target = self.graph(i - 1, i, i + 1)
        allowed = [
            [c for c in range(self.palette_size) if c not in {prev[w] for w in link.adjacency[v]}]
            for v in range(self.n)
        ]
        _, order = degeneracy(target)
        color = [-1] * self.n
        for v in reversed(order):
            taken = {color[w] for w in target.adjacency[v]}
            color[v] = next(c for c in allowed[v] if c not in taken)
        return color


def color_bounded_degree(g: TemporalGraph, delta: int) -> ColoringSeq:
    """Temporal colouring with ``5*delta + 1`` colours for ``delta``-bounded snapshots."""
    return run_stepper(BoundedDegreeStepper(g.n, delta), g)


class DupBoundedStepper(DuplicatedMixin, DegreeBoundMixin, OnlineStepper):
    """Recolours only at the second copy of each snapshot; ``3*delta + 1`` colours.

    ``c_1`` is a first-fit colouring of ``H_1``; the online contract forbids
    looking at ``H_2`` that early.
    """

    def __init__(self, n: int, delta: int):
        super().__init__(n)
        self.delta = delta
        self.palette_size = 3 * delta + 1

    def _accept(self, s: StaticGraph) -> None:
        self._check_pair(s)
        self._check_degree(s, len(self.window) + 1)

    def _finish(self) -> None:
        self._check_even()

    def _next(self, i: int) -> list[int]:
        if i == 1:
            return greedy(self.graph(1))
        if i % 2:
            return list(self.emitted[-1])
        prev = self.emitted[-1]
        h = self.graph(i)
        both = self.graph(i, i + 1)
        color = [-1] * self.n
        for v in range(self.n):
            taken = {prev[w] for w in h.adjacency[v]} | {color[w] for w in both.adjacency[v]}
            c = 0
            while c in taken:
                c += 1
            color[v] = c
        return color


def color_bounded_degree_duplicated(g: TemporalGraph, delta: int) -> ColoringSeq:
    """Temporal colouring with ``3*delta + 1`` colours for duplicated ``delta``-bounded snapshots."""
    check_duplicated(g)
    return run_stepper(DupBoundedStepper(g.n, delta), g)


# --- grow pace 1: delta + 2 ----------------------------------------------------------


class GrowPace1Stepper(DegreeBoundMixin, OnlineStepper):
    """Keeps every colour but possibly one endpoint of the edge about to appear.

    When the edge arriving at ``i+2`` joins two vertices of equal colour, the
    endpoint of degree at most ``delta`` in ``G_i | G_{i+1}`` (the smaller
    index if both qualify) takes a fresh colour clear of its neighbours.
    """

    def __init__(self, n: int, delta: int):
        super().__init__(n)
        self.delta = delta
        self.palette_size = delta + 2

    def _accept(self, s: StaticGraph) -> None:
        t = len(self.window) + 1
        self._check_degree(s, t)
        if self.window:
            prev = self.window[-1].edges
            if len(s.edges - prev) > 1 or len(prev - s.edges) > 1:
                raise ContractError(f"grow pace exceeds 1 between G_{t - 1} and G_{t}")

    def _next(self, i: int) -> list[int]:
        if i == 1:
            s1 = self.graph(1, 2)
            high = [v for v in range(self.n) if s1.degree(v) > self.delta]
            fixed = {high[0]: 0, high[1]: 1} if len(high) == 2 else {}
            return greedy(s1, fixed=fixed)
        prev = list(self.emitted[-1])
        arriving = self.edges(i + 1) - self.edges(i)
        if not arriving:
            return prev
        (u, v), = arriving
        if prev[u] != prev[v]:
            return prev
        link = self.graph(i - 1, i)
        x = next((y for y in (u, v) if link.degree(y) <= self.delta), None)
        assert x is not None, "an endpoint of low degree always exists under the preconditions"
        taken = {prev[x]} | {prev[w] for w in link.adjacency[x]}
        prev[x] = next(c for c in range(self.palette_size) if c not in taken)
        return prev


def color_growpace1(g: TemporalGraph, delta: int) -> ColoringSeq:
    """Temporal colouring with ``delta + 2`` colours for grow pace 1 and ``delta``-bounded snapshots."""
    return run_stepper(GrowPace1Stepper(g.n, delta), g)


# --- auxiliary colourings for end-to-end use --------------------------------------


def snapshot_colorings(g: TemporalGraph, exact_limit: int = 12) -> SnapshotColorings:
    color = auto_colorer(exact_limit)
    xs = [color(t, StaticGraph(g.n, e)) for t, e in enumerate(g.snapshots, 1)]
    k = max((max(x) + 1 for x in xs if x), default=1)
    return SnapshotColorings(tuple(tuple(x) for x in xs), k)


def dedup_colorings(g: TemporalGraph, exact_limit: int = 12) -> SnapshotColorings:
    check_duplicated(g)
    color = auto_colorer(exact_limit)
    xs = [color(j, StaticGraph(g.n, g.snapshots[t])) for j, t in enumerate(range(0, g.T, 2), 1)]
    k = max((max(x) + 1 for x in xs if x), default=1)
    return SnapshotColorings(tuple(tuple(x) for x in xs), k)


def smash_colorings(g: TemporalGraph, exact_limit: int = 12) -> tuple[list[list[int]], int]:
    from .graph import smash

    color = auto_colorer(exact_limit)
    cs = [list(color(t, smash(g, t, 1))) for t in range(1, g.T + 1)]
    k = max((max(c) + 1 for c in cs if c), default=1)
    return cs, k
