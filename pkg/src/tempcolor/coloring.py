"""Colourings, the compatibility relation and the temporal-colouring verifier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContractError
from .graph import Edge, StaticGraph, TemporalGraph, smash

Coloring = tuple[int, ...]

OK = "ok"
IMPROPER = "improper"
INCOMPATIBLE = "incompatible"


@dataclass(frozen=True)
class ColoringSeq:
    """Colourings ``c_1 .. c_T`` drawn from the palette ``0..palette_size-1``."""

    per_time: tuple[Coloring, ...]
    palette_size: int

    def __post_init__(self):
        per_time = tuple(tuple(int(x) for x in c) for c in self.per_time)
        object.__setattr__(self, "per_time", per_time)
        if self.palette_size < 1:
            raise ContractError("palette size must be positive")
        for t, c in enumerate(per_time, 1):
            for v, x in enumerate(c):
                if not 0 <= x < self.palette_size:
                    raise ContractError(
                        f"c_{t}({v}) = {x} outside palette 0..{self.palette_size - 1}"
                    )

    @property
    def T(self) -> int:
        return len(self.per_time)

    def __getitem__(self, t: int) -> Coloring:
        """The colouring at 1-based time ``t``."""
        return self.per_time[t - 1]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verification; ``time`` and ``edge`` locate the first violation."""

    status: str
    time: int | None = None
    edge: Edge | None = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == OK

    def __bool__(self) -> bool:
        return self.ok


def _check_size(c: Sequence[int], n: int, name: str) -> None:
    if len(c) != n:
        raise ContractError(f"{name} has {len(c)} entries for {n} vertices")


def proper_violation(c: Sequence[int], s: StaticGraph) -> Edge | None:
    """The smallest monochromatic edge of ``s`` under ``c``, if any."""
    for u, v in s.sorted_edges():
        if c[u] == c[v]:
            return (u, v)
    return None


def is_proper(c: Sequence[int], s: StaticGraph) -> bool:
    _check_size(c, s.n, "coloring")
    return all(c[u] != c[v] for u, v in s.edges)


def _compat_violation(
    c1: Sequence[int], c2: Sequence[int], edges: frozenset[Edge]
) -> tuple[int, Edge] | None:
    ordered = sorted(edges)
    for u, v in ordered:
        if c1[u] == c2[v]:
            return 0, (u, v)
    for u, v in ordered:
        if c1[v] == c2[u]:
            return 1, (u, v)
    return None


def is_compatible(
    c1: Sequence[int], c2: Sequence[int], g1: StaticGraph, g2: StaticGraph
) -> Verdict:
    """Check ``c1(u) != c2(v)`` and ``c1(v) != c2(u)`` for every edge of ``g1 | g2``."""
    if g1.n != g2.n:
        raise ContractError("graphs have different vertex counts")
    _check_size(c1, g1.n, "first coloring")
    _check_size(c2, g1.n, "second coloring")
    hit = _compat_violation(c1, c2, g1.edges | g2.edges)
    if hit is None:
        return Verdict(OK)
    direction, (u, v) = hit
    a, b = (u, v) if direction == 0 else (v, u)
    return Verdict(
        INCOMPATIBLE,
        edge=(u, v),
        detail=f"old color of {a} equals new color of {b} ({c1[a]})",
    )


def _check_seq(g: TemporalGraph, seq: ColoringSeq) -> None:
    if seq.T != g.T:
        raise ContractError(f"coloring sequence has {seq.T} steps for lifetime {g.T}")
    for t, c in enumerate(seq.per_time, 1):
        _check_size(c, g.n, f"c_{t}")


def verify(g: TemporalGraph, seq: ColoringSeq) -> Verdict:
    """Check both temporal-colouring conditions and report the earliest failure.

    Time ``t`` is examined in two stages: first ``c_t`` must be proper on the
    smash ``G_{t-1} | G_t | G_{t+1}``, then ``c_t`` and ``c_{t+1}`` must be
    compatible on ``G_t | G_{t+1}``.
    """
    _check_seq(g, seq)
    for t in range(1, g.T + 1):
        c = seq[t]
        bad = proper_violation(c, smash(g, t, 1))
        if bad is not None:
            u, v = bad
            return Verdict(
                IMPROPER, t, bad, f"c_{t} not proper on S_{t}: c_{t}({u}) = c_{t}({v}) = {c[u]}"
            )
        if t < g.T:
            nxt = seq[t + 1]
            hit = _compat_violation(c, nxt, g.edges_at(t) | g.edges_at(t + 1))
            if hit is not None:
                direction, (u, v) = hit
                a, b = (u, v) if direction == 0 else (v, u)
                return Verdict(
                    INCOMPATIBLE,
                    t,
                    (u, v),
                    f"c_{t} and c_{t + 1} incompatible: c_{t}({a}) = c_{t + 1}({b}) = {c[a]}",
                )
    return Verdict(OK)


def colors_used(seq: ColoringSeq) -> int:
    return len({x for c in seq.per_time for x in c})
