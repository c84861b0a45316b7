"""Lower-bound instances, each shipped with the certificate it is known for.

Hand-built edge lists are frozen as data below, each with a fixed map from
vertex labels to indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .coloring import Coloring, is_proper
from .errors import ContractError
from .graph import (
    Edge,
    StaticGraph,
    TemporalGraph,
    degeneracy,
    grow_pace,
    is_bipartite,
    is_forest,
    is_path,
    later_neighbour_count,
    max_degree,
    normalize_edge,
    smash,
    snapshot,
)
from .reduction import to_col2

SNAPSHOT_CLASSES: dict[str, Callable[[StaticGraph], bool]] = {
    "path": is_path,
    "forest": is_forest,
    "bipartite": lambda s: is_bipartite(s) is not None,
}


@dataclass(frozen=True)
class Claim:
    """What a gadget is supposed to certify. Unset fields are not claimed."""

    chi_temporal: int | None = None
    snapshot_class: str | None = None
    max_degree: int | None = None
    degeneracy: int | None = None
    orderings: tuple[tuple[int, ...], ...] | None = None
    grow_pace: int | None = None
    duplicated: bool = False
    # (time, missing edges): the smash at that time is complete minus these
    smash_shape: tuple[tuple[int, frozenset[Edge]], ...] = ()
    col2_nodes: frozenset[tuple[int, int]] | None = None
    # (time of c_i, palette, expected answer) for the shipped colouring
    extendable: tuple[tuple[int, int, bool], ...] = ()


@dataclass(frozen=True)
class GadgetInstance:
    name: str
    graph: TemporalGraph
    claim: Claim
    vertex_names: tuple[str, ...]
    fixed_coloring: dict[int, Coloring] = field(default_factory=dict)

    def label(self, v: int) -> str:
        return self.vertex_names[v]

    def self_check(self) -> list[str]:
        """Structural claims that fail; an empty list means all hold."""
        g, claim = self.graph, self.claim
        failures = []
        snaps = [snapshot(g, t) for t in range(1, g.T + 1)]
        if claim.snapshot_class is not None:
            test = SNAPSHOT_CLASSES[claim.snapshot_class]
            for t, s in enumerate(snaps, 1):
                if not test(s):
                    failures.append(f"G_{t} is not a {claim.snapshot_class}")
        if claim.max_degree is not None:
            for t, s in enumerate(snaps, 1):
                if max_degree(s) > claim.max_degree:
                    failures.append(f"G_{t} has degree above {claim.max_degree}")
        if claim.degeneracy is not None:
            for t, s in enumerate(snaps, 1):
                if degeneracy(s)[0] > claim.degeneracy:
                    failures.append(f"G_{t} is not {claim.degeneracy}-degenerate")
            for t, order in enumerate(claim.orderings or (), 1):
                if later_neighbour_count(snaps[t - 1], order) > claim.degeneracy:
                    failures.append(f"stated ordering of G_{t} is not a degeneracy witness")
        if claim.grow_pace is not None and grow_pace(g) != claim.grow_pace:
            failures.append(f"grow pace is {grow_pace(g)}, expected {claim.grow_pace}")
        if claim.duplicated:
            if g.T % 2 or any(g.snapshots[j] != g.snapshots[j + 1] for j in range(0, g.T, 2)):
                failures.append("snapshots are not duplicated in pairs")
        for t, missing in claim.smash_shape:
            expected = StaticGraph.complete(g.n).edges - missing
            if smash(g, t, 1).edges != expected:
                failures.append(f"S_{t} is not K_{g.n} minus {sorted(missing)}")
        if claim.col2_nodes is not None:
            if set(to_col2(g).nodes) != set(claim.col2_nodes):
                failures.append("col(G) node set differs from the claimed one")
        for t, c in self.fixed_coloring.items():
            if not is_proper(c, smash(g, t, 1)):
                failures.append(f"shipped c_{t} is not proper on S_{t}")
        return failures


def _edges(names: str, spec: str) -> frozenset[Edge]:
    """Parse ``"a-c c-d"`` against the label string ``names``."""
    index = {x: i for i, x in enumerate(names)}
    out = set()
    for pair in spec.split():
        a, b = pair.split("-")
        out.add(normalize_edge(index[a], index[b]))
    return frozenset(out)


def _labelled_edges(names: list[str], pairs: list[tuple[str, str]]) -> frozenset[Edge]:
    index = {x: i for i, x in enumerate(names)}
    return frozenset(normalize_edge(index[a], index[b]) for a, b in pairs)


def gadget_bipartite8() -> GadgetInstance:
    """Three bipartite snapshots on an 8-cycle whose smash is ``K_8``."""
    n = 8
    g1 = [(i, j) for i in range(0, n, 2) for j in range(1, n, 2)]
    g2 = [(i, (i + 2) % n) for i in range(n)]
    g3 = [(i, i + 4) for i in range(4)]
    g = TemporalGraph(n, (g1, g2, g3))
    return GadgetInstance(
        "bipartite8",
        g,
        Claim(chi_temporal=8, snapshot_class="bipartite", smash_shape=((2, frozenset()),)),
        tuple("abcdefgh"),
    )


def gadget_paths_k6() -> GadgetInstance:
    """Three Hamiltonian paths on six vertices that smash to ``K_6``."""
    names = "abcdef"
    g = TemporalGraph(
        6,
        (
            _edges(names, "d-a a-c c-e e-f f-b"),
            _edges(names, "f-a a-b b-c c-d d-e"),
            _edges(names, "c-f f-d d-b b-e e-a"),
        ),
    )
    return GadgetInstance(
        "paths_k6",
        g,
        Claim(snapshot_class="path", smash_shape=((2, frozenset()),)),
        tuple(names),
    )


def gadget_dup_k4() -> GadgetInstance:
    """Two paths covering ``K_4``, each shown twice: ``(H1, H1, H2, H2)``."""
    names = "abcd"
    h1 = _edges(names, "c-a a-d d-b")
    h2 = _edges(names, "a-b b-c c-d")
    g = TemporalGraph(4, (h1, h1, h2, h2))
    return GadgetInstance(
        "dup_k4",
        g,
        Claim(chi_temporal=4, snapshot_class="path", duplicated=True),
        tuple(names),
    )


def gadget_degenerate5d(d: int = 1) -> GadgetInstance:
    """Five bags of ``d`` vertices; three d-degenerate snapshots smash to ``K_{5d}``.

    Vertex ``(i-1)*d + (k-1)`` is the k-th vertex of bag ``A_i``.
    """
    if d < 1:
        raise ContractError("bag size d must be at least 1")

    def bag(i: int) -> list[int]:
        return [(i - 1) * d + k for k in range(d)]

    def complete_bipartite(i: int, j: int) -> set[Edge]:
        return {normalize_edge(a, b) for a in bag(i) for b in bag(j)}

    def clique(i: int) -> set[Edge]:
        return {normalize_edge(a, b) for a, b in combinations(bag(i), 2)}

    def staircase(i: int, j: int) -> set[Edge]:
        # each vertex of A_i joined to the next d vertices of the order A_i, A_j
        return clique(i) | {
            normalize_edge(bag(i)[k], bag(j)[l]) for k in range(d) for l in range(k + 1)
        }

    e1 = complete_bipartite(1, 2) | complete_bipartite(4, 5) | staircase(2, 3) | staircase(3, 4) | clique(5)
    e2 = complete_bipartite(2, 5) | complete_bipartite(5, 1) | staircase(4, 3) | staircase(3, 2) | clique(1)
    e3 = complete_bipartite(2, 4) | complete_bipartite(4, 1) | complete_bipartite(1, 3) | complete_bipartite(3, 5)
    orders = tuple(
        tuple(v for i in seq for v in bag(i))
        for seq in ((1, 2, 3, 4, 5), (4, 3, 2, 5, 1), (2, 4, 1, 3, 5))
    )
    g = TemporalGraph(5 * d, (e1, e2, e3))
    names = tuple(f"a{i}_{k}" for i in range(1, 6) for k in range(1, d + 1))
    return GadgetInstance(
        f"degenerate5d_d{d}",
        g,
        Claim(degeneracy=d, orderings=orders, smash_shape=((2, frozenset()),)),
        names,
    )


def gadget_bounded3delta(delta: int = 1) -> GadgetInstance:
    """A hub ``x`` plus three sets of ``delta`` vertices; the smash is ``K_{3*delta+1}``.

    Vertex 0 is ``x``; ``W_i`` occupies ``1 + (i-1)*delta .. i*delta``.
    """
    if delta < 1:
        raise ContractError("delta must be at least 1")
    w = [list(range(1 + i * delta, 1 + (i + 1) * delta)) for i in range(3)]

    def hub_clique(part: list[int]) -> set[Edge]:
        return {normalize_edge(a, b) for a, b in combinations([0] + part, 2)}

    def between(p: list[int], q: list[int]) -> set[Edge]:
        return {normalize_edge(a, b) for a in p for b in q}

    e1 = hub_clique(w[0]) | between(w[1], w[2])
    e2 = hub_clique(w[1]) | between(w[0], w[2])
    e3 = hub_clique(w[2]) | between(w[1], w[0])
    names = ("x",) + tuple(f"w{i + 1}_{k + 1}" for i in range(3) for k in range(delta))
    return GadgetInstance(
        f"bounded3delta_D{delta}",
        TemporalGraph(3 * delta + 1, (e1, e2, e3)),
        Claim(max_degree=delta, smash_shape=((2, frozenset()),)),
        names,
    )


SEVEN_NAMES = ["A", "u1", "u2", "u3", "u4", "u5", "u6", "B", "v1", "v2", "v3", "v4", "v5", "v6",
               "w1", "w2", "w3", "w4", "w5"]  # fmt: skip

SEVEN_G2 = [("w4", "w1"), ("u5", "w4"), ("u1", "u5"), ("u1", "u2"), ("A", "u2"), ("A", "u3"),
            ("u3", "u4"), ("u4", "u6"), ("u6", "w3"), ("w5", "w2"), ("v5", "w5"), ("v1", "v5"),
            ("v1", "v2"), ("B", "v2"), ("B", "v3"), ("v3", "v4"), ("v4", "v6"), ("v6", "w3")]  # fmt: skip

SEVEN_G3 = [("A", "u4"), ("A", "u6"), ("u2", "u4"), ("u3", "u2"), ("u1", "u3"), ("u1", "w4"),
            ("u6", "w1"), ("w1", "u5"), ("u5", "w3"), ("w3", "v5"), ("v5", "w2"), ("w2", "v6"),
            ("B", "v4"), ("B", "v6"), ("v2", "v4"), ("v3", "v2"), ("v1", "v3"), ("v1", "w5")]  # fmt: skip

SEVEN_G4 = [("A", "u1"), ("u1", "u2"), ("u2", "u3"), ("u3", "u4"), ("u4", "u5"), ("u5", "u6"),
            ("B", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5"), ("v5", "v6"),
            ("A", "B"), ("w1", "w4"), ("w4", "w3"), ("w3", "w5"), ("w5", "w2"), ("u6", "w1")]  # fmt: skip

# 1-based colours; u1 carries 5 since 4 would clash with u2 on G_2
SEVEN_C2 = {"A": 6, "B": 6, "w4": 6, "w5": 6, "u1": 5, "v1": 5, "u2": 4, "v2": 4, "w3": 4,
            "u3": 3, "v3": 3, "w1": 3, "w2": 3, "u4": 2, "v4": 2,
            "u5": 1, "v5": 1, "u6": 1, "v6": 1}  # fmt: skip


def gadget_seven_color_paths() -> GadgetInstance:
    """Four path snapshots on 19 vertices with a 6-colouring ``c_2`` that forces a 7th colour.

    ``G_1`` repeats ``G_2`` so that ``S_2`` is defined.
    """
    g2 = _labelled_edges(SEVEN_NAMES, SEVEN_G2)
    g3 = _labelled_edges(SEVEN_NAMES, SEVEN_G3)
    g4 = _labelled_edges(SEVEN_NAMES, SEVEN_G4)
    c2 = tuple(SEVEN_C2[x] - 1 for x in SEVEN_NAMES)
    return GadgetInstance(
        "seven_color_paths",
        TemporalGraph(len(SEVEN_NAMES), (g2, g2, g3, g4)),
        Claim(snapshot_class="path", extendable=((2, 6, False), (2, 7, True))),
        tuple(SEVEN_NAMES),
        {2: c2},
    )


def gadget_p4_growpace() -> GadgetInstance:
    """Grow pace 1, every snapshot a path on four vertices, four colours needed."""
    names = "abcd"
    g = TemporalGraph(
        4,
        (
            _edges(names, "a-c c-d d-b"),
            _edges(names, "a-c a-d d-b"),
            _edges(names, "a-d d-b b-c"),
            _edges(names, "b-c a-b a-d"),
        ),
    )
    return GadgetInstance(
        "p4_growpace",
        g,
        Claim(chi_temporal=4, snapshot_class="path", max_degree=2, grow_pace=1),
        tuple(names),
    )


def gadget_delta3_growpace() -> GadgetInstance:
    """Grow pace 1, maximum degree 3, five colours needed."""
    names = "abcde"
    g = TemporalGraph(
        5,
        (
            _edges(names, "e-d d-c c-b b-a a-c a-e b-e"),
            _edges(names, "e-d d-c c-b b-a a-e a-d b-e"),
            _edges(names, "d-c c-b b-a a-e a-d b-e c-e"),
            _edges(names, "d-c b-a a-d b-e c-e b-d a-e"),
        ),
    )
    return GadgetInstance(
        "delta3_growpace",
        g,
        Claim(
            chi_temporal=5,
            max_degree=3,
            grow_pace=1,
            smash_shape=((2, _edges(names, "b-d")), (3, _edges(names, "a-c"))),
        ),
        tuple(names),
    )


def gadget_col2_figure() -> GadgetInstance:
    """Four vertices over six steps illustrating the 2-colourability contraction."""
    names = "uvws"
    g = TemporalGraph(
        4,
        (
            _edges(names, "u-w u-v"),
            _edges(names, "w-s v-s"),
            _edges(names, "w-s"),
            _edges(names, "u-s"),
            _edges(names, "v-s"),
            _edges(names, "v-w"),
        ),
    )
    u, v, w, s = range(4)
    nodes = frozenset({(u, 1), (u, 3), (u, 6), (v, 1), (v, 4), (w, 1), (w, 5), (s, 1)})
    return GadgetInstance("col2_figure", g, Claim(col2_nodes=nodes), tuple(names))


GADGETS: dict[str, Callable[..., GadgetInstance]] = {
    "bipartite8": gadget_bipartite8,
    "paths_k6": gadget_paths_k6,
    "dup_k4": gadget_dup_k4,
    "degenerate5d": gadget_degenerate5d,
    "bounded3delta": gadget_bounded3delta,
    "seven_color_paths": gadget_seven_color_paths,
    "p4_growpace": gadget_p4_growpace,
    "delta3_growpace": gadget_delta3_growpace,
    "col2_figure": gadget_col2_figure,
}


def build(name: str, d: int | None = None, delta: int | None = None) -> GadgetInstance:
    """Look up a gadget by name; ``d``/``delta`` parametrise the two families."""
    if name not in GADGETS:
        raise ContractError(f"unknown gadget {name!r}; choose from {', '.join(GADGETS)}")
    if name == "degenerate5d":
        return gadget_degenerate5d(1 if d is None else d)
    if name == "bounded3delta":
        return gadget_bounded3delta(1 if delta is None else delta)
    if d is not None or delta is not None:
        raise ContractError(f"gadget {name!r} takes no parameters")
    return GADGETS[name]()
