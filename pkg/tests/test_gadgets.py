from pathlib import Path

import pytest

from tempcolor import io
from tempcolor.coloring import is_proper
from tempcolor.errors import ContractError
from tempcolor.exact import chi_static, chi_temporal, extendable
from tempcolor.gadgets import GADGETS, build
from tempcolor.graph import StaticGraph, degeneracy, grow_pace, is_path, max_degree, smash, snapshot

GOLDEN = Path(__file__).parent / "golden"

ALL = [(name, {}) for name in GADGETS if name not in ("degenerate5d", "bounded3delta")]
ALL += [("degenerate5d", {"d": d}) for d in (1, 2, 3)]
ALL += [("bounded3delta", {"delta": d}) for d in (1, 2, 3)]


@pytest.mark.parametrize("name,kw", ALL)
def test_self_check(name, kw):
    assert build(name, **kw).self_check() == []


@pytest.mark.parametrize("name", ["p4_growpace", "delta3_growpace", "dup_k4", "bipartite8"])
def test_chi_claims(name):
    gi = build(name)
    assert chi_temporal(gi.graph) == gi.claim.chi_temporal


def test_bipartite8_structure():
    g = build("bipartite8").graph
    assert smash(g, 2, 1).is_complete()


def test_paths_k6_structure():
    g = build("paths_k6").graph
    assert all(is_path(snapshot(g, t)) for t in (1, 2, 3))
    assert chi_static(smash(g, 2, 1)) == 6
    assert chi_temporal(g) == 6


def test_dup_k4_structure():
    g = build("dup_k4").graph
    assert g.snapshots[0] == g.snapshots[1] and g.snapshots[2] == g.snapshots[3]
    assert (StaticGraph(4, g.snapshots[0]) | StaticGraph(4, g.snapshots[2])).is_complete()
    assert all(chi_static(snapshot(g, t)) == 2 for t in (1, 3))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_degenerate5d(d):
    g = build("degenerate5d", d=d).graph
    assert all(degeneracy(snapshot(g, t))[0] == d for t in (1, 2, 3))
    s = smash(g, 2, 1)
    assert len(s.edges) == 5 * d * (5 * d - 1) // 2
    if d == 1:
        assert chi_static(s) == 5


def test_degenerate5d_rejects_zero():
    with pytest.raises(ContractError):
        build("degenerate5d", d=0)


@pytest.mark.parametrize("delta", [1, 2, 3])
def test_bounded3delta(delta):
    g = build("bounded3delta", delta=delta).graph
    assert all(max_degree(snapshot(g, t)) == delta for t in (1, 2, 3))
    assert smash(g, 2, 1).is_complete() and g.n == 3 * delta + 1
    if delta == 2:
        assert chi_static(smash(g, 2, 1)) == 7


def test_seven_color_paths():
    gi = build("seven_color_paths")
    g, c2 = gi.graph, gi.fixed_coloring[2]
    assert g.n == 19 and g.T == 4
    assert all(is_path(snapshot(g, t)) for t in range(1, 5))
    assert is_proper(c2, snapshot(g, 2) | snapshot(g, 3))
    assert is_proper(c2, smash(g, 2, 1))
    assert max(c2) == 5
    for t, k, expected in gi.claim.extendable:
        assert extendable(g, t, c2, k) is expected


def test_growpace_gadgets():
    for name, delta in (("p4_growpace", 2), ("delta3_growpace", 3)):
        g = build(name).graph
        assert grow_pace(g) == 1
        assert all(max_degree(snapshot(g, t)) == delta for t in range(1, g.T + 1))


def test_build_errors():
    with pytest.raises(ContractError):
        build("nope")
    with pytest.raises(ContractError):
        build("p4_growpace", d=2)


@pytest.mark.parametrize("name,kw", ALL)
def test_generation_is_deterministic(name, kw):
    a, b = build(name, **kw), build(name, **kw)
    assert io.emit_tg(a.graph) == io.emit_tg(b.graph)
    golden = GOLDEN / f"{a.name}.tg"
    if golden.exists():
        assert io.emit_tg(a.graph) == golden.read_text()
        assert io.emit_names(a.vertex_names) == (GOLDEN / f"{a.name}.names").read_text()
