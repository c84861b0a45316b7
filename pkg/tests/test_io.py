import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import static_graphs, temporal_graphs
from tempcolor import io
from tempcolor.coloring import ColoringSeq
from tempcolor.errors import FormatError
from tempcolor.reduction import to_col2, to_static


@given(temporal_graphs(min_n=0, max_n=8, max_T=6))
def test_tg_round_trip(g):
    assert io.parse_tg(io.emit_tg(g)) == g


@given(static_graphs(max_n=9))
def test_sg_round_trip(s):
    assert io.parse_sg(io.emit_sg(s)) == s


@given(st.integers(1, 6), st.integers(1, 5), st.integers(0, 6), st.data())
def test_tc_round_trip(k, T, n, data):
    per = tuple(tuple(data.draw(st.integers(0, k - 1)) for _ in range(n)) for _ in range(T))
    seq = ColoringSeq(per, k)
    assert io.parse_tc(io.emit_tc(seq), n=n, T=T) == seq


def test_names_round_trip():
    names = ("A", "u1", "w5")
    assert io.parse_names(io.emit_names(names)) == dict(enumerate(names))


def test_comments_and_blank_lines():
    text = "# header\ntg 1\nn 2  # two vertices\n\nT 1\nsnapshot 1\ne 0 1\n"
    g = io.parse_tg(text)
    assert g.n == 2 and g.snapshots == (frozenset({(0, 1)}),)


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("tg 2\nn 2\nT 1\nsnapshot 1\n", "header"),
        ("tg 1\nn 2\nT 1\nsnapshot 1\ne 0 0\n", "self-loop"),
        ("tg 1\nn 2\nT 1\nsnapshot 1\ne 0 2\n", "out of range"),
        ("tg 1\nn 2\nT 1\nsnapshot 1\ne 1 0\n", "u < v"),
        ("tg 1\nn 2\nT 1\nsnapshot 1\ne 0 1\ne 0 1\n", "duplicate"),
        ("tg 1\nn 2\nT 2\nsnapshot 2\n", "expected snapshot 1"),
        ("tg 1\nn 2\nT 2\nsnapshot 1\n", "found 1 snapshots"),
        ("tg 1\nn 2\nT 1\ne 0 1\n", "before the first"),
        ("tg 1\nn x\nT 1\nsnapshot 1\n", "integer"),
        ("", "empty"),
    ],
)
def test_tg_rejects(text, fragment):
    with pytest.raises(FormatError) as info:
        io.parse_tg(text)
    assert fragment in str(info.value)


def test_format_error_carries_line():
    with pytest.raises(FormatError) as info:
        io.parse_tg("tg 1\nn 2\nT 1\nsnapshot 1\ne 0 0\n")
    assert info.value.line == 5 and str(info.value).startswith("line 5:")


def test_tc_rejects():
    with pytest.raises(FormatError):
        io.parse_tc("tc 1\nk 2\nt 1 0 2\n")
    with pytest.raises(FormatError):
        io.parse_tc("tc 1\nk 2\nt 2 0 1\n")
    with pytest.raises(FormatError):
        io.parse_tc("tc 1\nk 2\nt 1 0 1\n", n=3)
    with pytest.raises(FormatError):
        io.parse_tc("tc 1\nk 2\nt 1 0 1\n", T=2)


def test_tc_partial():
    k, cs = io.parse_tc_partial(io.emit_tc_partial(7, {2: (0, 6)}))
    assert k == 7 and cs == {2: (0, 6)}


def test_maps():
    from tempcolor.gadgets import build

    g = build("col2_figure").graph
    red = to_static(g)
    rows = io.parse_map(io.emit_static_map(red))
    assert len(rows) == g.n * g.T
    assert all(red.flat(v, t) == x for x, v, t in rows)
    col = to_col2(g)
    assert [(v, t) for _, v, t in io.parse_map(io.emit_col2_map(col))] == list(col.nodes)
