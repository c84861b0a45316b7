from hypothesis import given

from conftest import temporal_graphs
from oracles import brute_temporal_colorable, snap
from tempcolor.coloring import verify
from tempcolor.exact import chi_static, chi_temporal
from tempcolor.gadgets import build
from tempcolor.graph import StaticGraph, TemporalGraph, smash
from tempcolor.reduction import change_times, decide_2colorable, to_col2, to_static

TRIANGLE = frozenset({(0, 1), (1, 2), (0, 2)})


def test_static_single_snapshot_is_the_snapshot():
    red = to_static(TemporalGraph(3, (TRIANGLE,)))
    assert red.graph.n == 3 and red.graph.edges == TRIANGLE


def test_static_index_map():
    red = to_static(build("p4_growpace").graph)
    assert red.graph.n == 16
    for x in range(16):
        v, t = red.unflat(x)
        assert red.flat(v, t) == x and 0 <= v < 4 and 1 <= t <= 4


def test_static_p4_chi_four():
    assert chi_static(to_static(build("p4_growpace").graph).graph) == 4


@given(temporal_graphs(max_n=5, max_T=4))
def test_static_edges_match_definition(g):
    red = to_static(g)
    want = set()
    for t in range(1, g.T + 1):
        for u, v in smash(g, t, 1).edges:
            want.add(tuple(sorted((red.flat(u, t), red.flat(v, t)))))
        if t < g.T:
            for u, v in snap(g, t) | snap(g, t + 1):
                want.add(tuple(sorted((red.flat(u, t), red.flat(v, t + 1)))))
                want.add(tuple(sorted((red.flat(v, t), red.flat(u, t + 1)))))
    assert red.graph.edges == want


def test_col2_figure_nodes_and_edge():
    gi = build("col2_figure")
    col = to_col2(gi.graph)
    idx = {name: i for i, name in enumerate(gi.vertex_names)}
    want = {(idx[a], t) for a, t in [("u", 1), ("u", 3), ("u", 6), ("v", 1), ("v", 4), ("w", 1), ("w", 5), ("s", 1)]}
    assert set(col.nodes) == want
    a = col.nodes.index((idx["v"], 4))
    b = col.nodes.index((idx["w"], 5))
    assert tuple(sorted((a, b))) in col.graph.edges


def test_col2_edgeless():
    g = TemporalGraph(2, (frozenset(),) * 4)
    col = to_col2(g)
    assert set(col.nodes) == {(v, t) for v in range(2) for t in range(1, 5)}
    assert not col.graph.edges


@given(temporal_graphs(max_n=5, max_T=5))
def test_col2_intervals_and_edges(g):
    col = to_col2(g)
    by_vertex = {}
    for (v, start), (a, b) in zip(col.nodes, col.intervals):
        assert start == a < b
        by_vertex.setdefault(v, []).append((a, b))
    for v in range(g.n):
        spans = by_vertex[v]
        assert spans[0][0] == 1 and spans[-1][1] == g.T + 1
        assert all(x[1] == y[0] for x, y in zip(spans, spans[1:]))
        for a, b in spans:
            # no opportunity strictly inside an interval
            for t in range(a + 1, b):
                assert any(v in e for e in snap(g, t) | snap(g, t - 1))
    # edges by a quadratic scan over node pairs and times
    want = set()
    nodes = list(zip(col.nodes, col.intervals))
    for i, j in ((i, j) for i in range(len(nodes)) for j in range(i + 1, len(nodes))):
        (u, _), (a1, b1) = nodes[i]
        (v, _), (a2, b2) = nodes[j]
        if u == v:
            continue
        for t in range(max(a1, a2), min(b1, b2)):
            if tuple(sorted((u, v))) in snap(g, t):
                want.add((i, j))
                break
    assert col.graph.edges == want


def test_change_times_start_at_one():
    g = build("col2_figure").graph
    for v in range(g.n):
        assert change_times(g, v)[0] == 1


def test_decide_col2_figure():
    g = build("col2_figure").graph
    ok, seq = decide_2colorable(g)
    assert ok and verify(g, seq).ok
    assert brute_temporal_colorable(g, 2)


def test_decide_triangle_smash_false():
    g = TemporalGraph(3, (frozenset({(0, 1)}), frozenset({(1, 2)}), frozenset({(0, 2)})))
    assert decide_2colorable(g)[0] is False


def test_decide_single_edge_true():
    e = frozenset({(0, 1)})
    ok, seq = decide_2colorable(TemporalGraph(2, (e, e, e)))
    assert ok and seq.palette_size == 2


@given(temporal_graphs(max_n=5, max_T=4))
def test_decide_matches_oracles(g):
    ok, seq = decide_2colorable(g)
    assert ok == brute_temporal_colorable(g, 2)
    assert ok == (chi_temporal(g, route="direct") <= 2)
    if ok:
        assert verify(g, seq).ok
