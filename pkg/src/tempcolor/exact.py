"""Exact chromatic numbers, static and temporal.

Two independent routes compute the temporal chromatic number:

* ``route="static"`` colours the layered reduction with a branch-and-bound
  static solver (greedy clique lower bound, DSATUR upper bound, then
  k-colouring backtracking with the clique precoloured);
* ``route="direct"`` walks time forward, enumerating colourings of each smash
  that are compatible with the previous step's colouring.

Both share nothing beyond the graph types. Colour sets are int bitmasks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .coloring import Coloring, ColoringSeq, proper_violation
from .errors import BudgetExceeded, ContractError
from .graph import StaticGraph, TemporalGraph, grow_pace, max_degree, smash, snapshot
from .reduction import to_static


@dataclass(frozen=True)
class SearchConfig:
    """Limits for exact searches. ``None`` means unlimited."""

    node_budget: int | None = None
    time_budget: float | None = None
    workers: int = 1
    canonical: bool = True

    def __post_init__(self):
        for name in ("node_budget", "time_budget"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ContractError(f"{name} must be positive")
        if self.workers < 1:
            raise ContractError("workers must be at least 1")


DEFAULT_CONFIG = SearchConfig()


class _Meter:
    """Counts search nodes and enforces the configured budgets."""

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        self.nodes = 0
        self.deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
        self.lower = 0
        self.upper = 0

    def tick(self) -> None:
        self.nodes += 1
        budget = self.cfg.node_budget
        if budget is not None and self.nodes > budget:
            raise BudgetExceeded(self.lower, self.upper, "node budget exhausted")
        if self.deadline is not None and self.nodes % 512 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(self.lower, self.upper, "time budget exhausted")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# --- static graphs -----------------------------------------------------------


def greedy_clique(s: StaticGraph) -> list[int]:
    """A large clique found by greedy extension from every start vertex."""
    masks = s.masks
    deg = [_popcount(m) for m in masks]
    best: list[int] = []
    for start in sorted(range(s.n), key=lambda v: (-deg[v], v)):
        if deg[start] + 1 <= len(best):
            break
        clique = [start]
        cand = masks[start]
        while cand:
            v = max(_bits(cand), key=lambda w: (_popcount(masks[w] & cand), -w))
            clique.append(v)
            cand &= masks[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur(s: StaticGraph) -> list[int]:
    """Brelaz's DSATUR heuristic; ties go to higher degree, then lower index."""
    n = s.n
    masks = s.masks
    deg = [_popcount(m) for m in masks]
    color = [-1] * n
    seen = [0] * n  # bitmask of neighbour colours
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda x: (_popcount(seen[x]), deg[x], -x))
        c = _lowest_bit(~seen[v])
        color[v] = c
        uncolored.remove(v)
        for w in _bits(masks[v]):
            seen[w] |= 1 << c
    return color


def _k_coloring(
    masks: Sequence[int], k: int, clique: Sequence[int], meter: _Meter
) -> list[int] | None:
    """Backtracking k-colouring with forward checking.

    Clique vertices are fixed to colours ``0..len(clique)-1``; afterwards a new
    colour may only be opened in increasing order, which removes palette
    symmetry.
    """
    n = len(masks)
    full = (1 << k) - 1
    color = [-1] * n
    dom = [full] * n
    deg = [_popcount(m) for m in masks]
    uncolored = set(range(n))

    def assign(v: int, c: int) -> list[int] | None:
        bit = 1 << c
        color[v] = c
        uncolored.discard(v)
        touched = []
        for w in _bits(masks[v]):
            if color[w] == -1 and dom[w] & bit:
                dom[w] ^= bit
                touched.append(w)
                if not dom[w]:
                    undo(v, c, touched)
                    return None
        return touched

    def undo(v: int, c: int, touched: list[int]) -> None:
        bit = 1 << c
        for w in touched:
            dom[w] |= bit
        color[v] = -1
        uncolored.add(v)

    if len(clique) > k:
        return None
    for i, v in enumerate(clique):
        if not dom[v] & (1 << i) or assign(v, i) is None:
            return None
    used = len(clique) - 1

    def search(used: int) -> bool:
        if not uncolored:
            return True
        meter.tick()
        v = min(uncolored, key=lambda x: (_popcount(dom[x]), -deg[x], x))
        allowed = dom[v] & ((1 << min(k, used + 2)) - 1)
        for c in _bits(allowed):
            touched = assign(v, c)
            if touched is None:
                continue
            if search(max(used, c)):
                return True
            undo(v, c, touched)
        return False

    return color if search(used) else None


def solve_static(
    s: StaticGraph, cfg: SearchConfig = DEFAULT_CONFIG, lower_bound: int = 0
) -> tuple[int, list[int]]:
    """Exact chromatic number together with an optimal colouring.

    ``lower_bound`` may pass in a bound already known to the caller.
    """
    if s.n == 0:
        return 0, []
    meter = _Meter(cfg)
    clique = greedy_clique(s)
    lb = max(len(clique), lower_bound, 1)
    best = dsatur(s)
    ub = max(best) + 1
    meter.lower, meter.upper = lb, ub
    while ub > lb:
        trial = _k_coloring(s.masks, ub - 1, clique, meter)
        if trial is None:
            break
        best = trial
        ub = max(trial) + 1
        meter.upper = ub
    return ub, best


def chi_static(s: StaticGraph, cfg: SearchConfig = DEFAULT_CONFIG) -> int:
    return solve_static(s, cfg)[0]


# --- temporal graphs: layered search ------------------------------------------


def _list_colorings(
    masks: Sequence[int], dom: Sequence[int], meter: _Meter, fresh_palette: bool = False
) -> Iterator[list[int]]:
    """Yield every proper colouring with ``color[v]`` drawn from ``dom[v]``.

    Picks the vertex with the fewest remaining colours (lowest index on
    ties). With ``fresh_palette`` all colours are interchangeable, so only
    colourings that open colours in increasing order are produced.
    """
    n = len(masks)
    dom = list(dom)
    if any(d == 0 for d in dom):
        return
    color = [-1] * n
    uncolored = set(range(n))

    def rec(used: int) -> Iterator[list[int]]:
        if not uncolored:
            yield list(color)
            return
        meter.tick()
        v = min(uncolored, key=lambda x: (_popcount(dom[x]), x))
        allowed = dom[v]
        if fresh_palette:
            allowed &= (1 << (used + 2)) - 1
        for c in _bits(allowed):
            bit = 1 << c
            touched = []
            dead = False
            for w in _bits(masks[v]):
                if color[w] == -1 and dom[w] & bit:
                    dom[w] ^= bit
                    touched.append(w)
                    if not dom[w]:
                        dead = True
                        break
            if not dead:
                color[v] = c
                uncolored.remove(v)
                yield from rec(max(used, c))
                uncolored.add(v)
                color[v] = -1
            for w in touched:
                dom[w] |= bit

    yield from rec(-1)


def _allowed_after(prev: Sequence[int], link: StaticGraph, k: int) -> list[int]:
    """Colours each vertex may take next, given the previous colouring.

    A vertex must avoid the previous colour of every neighbour on ``link``.
    """
    full = (1 << k) - 1
    out = []
    for v in range(link.n):
        forbid = 0
        for w in link.adjacency[v]:
            forbid |= 1 << prev[w]
        out.append(full & ~forbid)
    return out


def temporal_k_coloring(
    g: TemporalGraph, k: int, cfg: SearchConfig = DEFAULT_CONFIG, meter: _Meter | None = None
) -> ColoringSeq | None:
    """A temporal k-colouring found by time-major backtracking, or ``None``."""
    meter = meter or _Meter(cfg)
    if k < 1:
        return None
    smashes = [smash(g, t, 1) for t in range(1, g.T + 1)]
    links = [snapshot(g, t) | snapshot(g, t + 1) for t in range(1, g.T)]
    dead: list[set[tuple[int, ...]]] = [set() for _ in range(g.T)]
    chosen: list[list[int]] = []

    def rec(t: int) -> bool:
        # t is 0-based here
        if t == g.T:
            return True
        if t == 0:
            dom = [(1 << k) - 1] * g.n
        else:
            key = tuple(chosen[-1])
            if key in dead[t]:
                return False
            dom = _allowed_after(chosen[-1], links[t - 1], k)
        for c in _list_colorings(smashes[t].masks, dom, meter, fresh_palette=(t == 0)):
            chosen.append(c)
            if rec(t + 1):
                return True
            chosen.pop()
        if t > 0:
            dead[t].add(tuple(chosen[-1]))
        return False

    if rec(0):
        return ColoringSeq(tuple(tuple(c) for c in chosen), k)
    return None


def _chi_3s(g: TemporalGraph, cfg: SearchConfig) -> int:
    return max(chi_static(smash(g, t, 1), cfg) for t in range(1, g.T + 1))


def solve_temporal(
    g: TemporalGraph, cfg: SearchConfig = DEFAULT_CONFIG, route: str = "static"
) -> tuple[int, ColoringSeq]:
    """Temporal chromatic number with an optimal colouring sequence."""
    if g.n == 0:
        return 0, ColoringSeq(((),) * g.T, 1)
    if route == "static":
        red = to_static(g)
        chi, flat = solve_static(red.graph, cfg)
        return chi, red.lower(flat, chi)
    if route == "direct":
        # starts from 1 so this route never leans on the static solver
        meter = _Meter(cfg)
        k = 1
        while True:
            meter.upper = 2 * k
            seq = temporal_k_coloring(g, k, cfg, meter)
            if seq is not None:
                return k, seq
            k += 1
            meter.lower = k
    raise ContractError(f"unknown route {route!r}")


def chi_temporal(g: TemporalGraph, cfg: SearchConfig = DEFAULT_CONFIG, route: str = "static") -> int:
    return solve_temporal(g, cfg, route)[0]


def extendable(
    g: TemporalGraph,
    i: int,
    c_i: Sequence[int],
    k: int,
    cfg: SearchConfig = DEFAULT_CONFIG,
) -> bool:
    """Whether some k-colouring ``c_{i+1}`` follows ``c_i`` legally.

    ``c_{i+1}`` must be proper on ``S_{i+1}`` and compatible with ``c_i`` on
    ``G_i | G_{i+1}``.
    """
    return next_coloring(g, i, c_i, k, cfg) is not None


def next_coloring(
    g: TemporalGraph,
    i: int,
    c_i: Sequence[int],
    k: int,
    cfg: SearchConfig = DEFAULT_CONFIG,
) -> Coloring | None:
    if not 1 <= i < g.T:
        raise IndexError(f"time {i} has no successor in 1..{g.T}")
    if len(c_i) != g.n:
        raise ContractError(f"coloring has {len(c_i)} entries for {g.n} vertices")
    bad = proper_violation(c_i, smash(g, i, 1))
    if bad is not None:
        raise ContractError(f"c_{i} is not proper on S_{i}: edge {bad}")
    if k < 1:
        return None
    dom = _allowed_after(c_i, snapshot(g, i) | snapshot(g, i + 1), k)
    for c in _list_colorings(smash(g, i + 1, 1).masks, dom, _Meter(cfg)):
        return tuple(c)
    return None


# --- bounds ---------------------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    chi_s: int
    chi_3s: int
    delta: int
    grow_pace: int
    uppers: dict[str, int] = field(default_factory=dict)

    @property
    def lower(self) -> int:
        return self.chi_3s

    @property
    def upper(self) -> int:
        return min(self.uppers.values())


def is_duplicated(g: TemporalGraph) -> bool:
    """``T`` even and ``G_{2j-1} = G_{2j}`` for every ``j``."""
    s = g.snapshots
    return g.T % 2 == 0 and all(s[j] == s[j + 1] for j in range(0, g.T, 2))


def bound_report(g: TemporalGraph, cfg: SearchConfig = DEFAULT_CONFIG) -> BoundReport:
    chi_s = max(chi_static(snapshot(g, t), cfg) for t in range(1, g.T + 1))
    chi_3s = _chi_3s(g, cfg)
    delta = max(max_degree(snapshot(g, t)) for t in range(1, g.T + 1))
    pace = grow_pace(g)
    uppers = {"cube": chi_s**3, "double": 2 * chi_3s, "degree": 5 * delta + 1}
    if is_duplicated(g):
        uppers["dup_square"] = chi_s**2
        uppers["dup_degree"] = 3 * delta + 1
    if pace <= 1:
        uppers["growpace1"] = delta + 2
    report = BoundReport(chi_s, chi_3s, delta, pace, uppers)
    assert report.lower <= report.upper, report
    return report
