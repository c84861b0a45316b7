"""Line-oriented text formats.

``tg 1``  temporal graph: ``n``, ``T``, then ``snapshot t`` blocks of ``e u v`` lines.
``tc 1``  colouring sequence: ``k <palette>``, then ``t <t> <colours...>`` lines.
``sg 1``  static graph: ``n``, then ``e u v`` lines.
``nm 1``  vertex names: ``v <index> <label>`` lines.
Map sidecar for reductions: ``m <flat> <v> <t>`` lines.

``#`` starts a comment anywhere on a line. Emitters write edges sorted, so
output is byte-stable.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .coloring import Coloring, ColoringSeq
from .errors import FormatError
from .graph import StaticGraph, TemporalGraph
from .reduction import Col2Reduction, StaticReduction


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            out.append((lineno, body))
    return out


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", lineno) from None
    if value < 0:
        raise FormatError(f"{what} must be non-negative, got {value}", lineno)
    return value


def _expect(lines, pos: int, key: str, arity: int) -> tuple[int, list[str]]:
    if pos >= len(lines):
        raise FormatError(f"unexpected end of input, expected {key!r}")
    lineno, toks = lines[pos]
    if toks[0] != key or len(toks) != arity + 1:
        raise FormatError(f"expected '{key}' with {arity} argument(s), got {' '.join(toks)!r}", lineno)
    return lineno, toks[1:]


def _magic(lines, tag: str) -> None:
    if not lines:
        raise FormatError(f"empty input, expected '{tag} 1'")
    lineno, toks = lines[0]
    if toks != [tag, "1"]:
        raise FormatError(f"expected header '{tag} 1', got {' '.join(toks)!r}", lineno)


def _edge(toks: list[str], lineno: int, n: int, seen: set) -> tuple[int, int]:
    if len(toks) != 3:
        raise FormatError("edge lines are 'e <u> <v>'", lineno)
    u, v = _int(toks[1], lineno, "endpoint"), _int(toks[2], lineno, "endpoint")
    if u == v:
        raise FormatError(f"self-loop at vertex {u}", lineno)
    if u > v:
        raise FormatError(f"edge endpoints must satisfy u < v, got {u} {v}", lineno)
    if v >= n:
        raise FormatError(f"endpoint {v} out of range 0..{n - 1}", lineno)
    if (u, v) in seen:
        raise FormatError(f"duplicate edge {u} {v}", lineno)
    seen.add((u, v))
    return u, v


# --- temporal graphs -------------------------------------------------------------


def parse_tg(text: str) -> TemporalGraph:
    lines = _lines(text)
    _magic(lines, "tg")
    _, (n_tok,) = _expect(lines, 1, "n", 1)
    lineno, (t_tok,) = _expect(lines, 2, "T", 1)
    n = _int(n_tok, lines[1][0], "n")
    T = _int(t_tok, lineno, "T")
    if T < 1:
        raise FormatError("T must be at least 1", lineno)
    snaps: list[set] = []
    seen: set = set()
    for lineno, toks in lines[3:]:
        if toks[0] == "snapshot":
            if len(toks) != 2:
                raise FormatError("snapshot lines are 'snapshot <t>'", lineno)
            t = _int(toks[1], lineno, "snapshot index")
            if t != len(snaps) + 1:
                raise FormatError(f"expected snapshot {len(snaps) + 1}, got {t}", lineno)
            if t > T:
                raise FormatError(f"snapshot {t} beyond T={T}", lineno)
            snaps.append(set())
            seen = set()
        elif toks[0] == "e":
            if not snaps:
                raise FormatError("edge before the first snapshot header", lineno)
            snaps[-1].add(_edge(toks, lineno, n, seen))
        else:
            raise FormatError(f"unknown record {toks[0]!r}", lineno)
    if len(snaps) != T:
        raise FormatError(f"found {len(snaps)} snapshots, expected {T}")
    return TemporalGraph(n, tuple(frozenset(s) for s in snaps))


def emit_tg(g: TemporalGraph) -> str:
    out = ["tg 1", f"n {g.n}", f"T {g.T}"]
    for t, edges in enumerate(g.snapshots, 1):
        out.append(f"snapshot {t}")
        out.extend(f"e {u} {v}" for u, v in sorted(edges))
    return "\n".join(out) + "\n"


# --- colourings --------------------------------------------------------------------


def parse_tc_partial(text: str, n: int | None = None) -> tuple[int, dict[int, Coloring]]:
    """Palette size and the colourings present, keyed by time; times must increase."""
    lines = _lines(text)
    _magic(lines, "tc")
    lineno, (k_tok,) = _expect(lines, 1, "k", 1)
    k = _int(k_tok, lineno, "palette size")
    if k < 1:
        raise FormatError("palette size must be positive", lineno)
    out: dict[int, Coloring] = {}
    for lineno, toks in lines[2:]:
        if toks[0] != "t" or len(toks) < 2:
            raise FormatError(f"expected 't <t> <colors...>', got {' '.join(toks)!r}", lineno)
        t = _int(toks[1], lineno, "time")
        if t < 1 or (out and t <= max(out)):
            raise FormatError(f"time {t} out of order", lineno)
        colors = tuple(_int(x, lineno, "color") for x in toks[2:])
        if n is not None and len(colors) != n:
            raise FormatError(f"time {t} lists {len(colors)} colors for {n} vertices", lineno)
        for v, c in enumerate(colors):
            if c >= k:
                raise FormatError(f"color {c} of vertex {v} outside palette 0..{k - 1}", lineno)
        out[t] = colors
    return k, out


def parse_tc(text: str, n: int | None = None, T: int | None = None) -> ColoringSeq:
    k, partial = parse_tc_partial(text, n)
    times = sorted(partial)
    if times != list(range(1, len(times) + 1)):
        raise FormatError("coloring sequence must list times 1, 2, ... without gaps")
    if T is not None and len(times) != T:
        raise FormatError(f"coloring sequence has {len(times)} steps, expected {T}")
    return ColoringSeq(tuple(partial[t] for t in times), k)


def emit_tc_partial(palette: int, colorings: Mapping[int, Sequence[int]]) -> str:
    out = ["tc 1", f"k {palette}"]
    for t in sorted(colorings):
        out.append(" ".join(["t", str(t), *map(str, colorings[t])]))
    return "\n".join(out) + "\n"


def emit_tc(seq: ColoringSeq) -> str:
    return emit_tc_partial(seq.palette_size, dict(enumerate(seq.per_time, 1)))


# --- static graphs and reduction maps ----------------------------------------------


def parse_sg(text: str) -> StaticGraph:
    lines = _lines(text)
    _magic(lines, "sg")
    lineno, (n_tok,) = _expect(lines, 1, "n", 1)
    n = _int(n_tok, lineno, "n")
    seen: set = set()
    edges = []
    for lineno, toks in lines[2:]:
        if toks[0] != "e":
            raise FormatError(f"unknown record {toks[0]!r}", lineno)
        edges.append(_edge(toks, lineno, n, seen))
    return StaticGraph(n, frozenset(edges))


def emit_sg(s: StaticGraph) -> str:
    out = ["sg 1", f"n {s.n}"]
    out.extend(f"e {u} {v}" for u, v in s.sorted_edges())
    return "\n".join(out) + "\n"


def emit_static_map(red: StaticReduction) -> str:
    rows = []
    for x in range(red.n * red.T):
        v, t = red.unflat(x)
        rows.append(f"m {x} {v} {t}")
    return "".join(r + "\n" for r in rows)


def emit_col2_map(red: Col2Reduction) -> str:
    """One line per node: ``m <node> <v> <start>``; the node covers ``start`` until the next start."""
    return "".join(f"m {i} {v} {t}\n" for i, (v, t) in enumerate(red.nodes))


def parse_map(text: str) -> list[tuple[int, int, int]]:
    out = []
    for lineno, toks in _lines(text):
        if toks[0] != "m" or len(toks) != 4:
            raise FormatError("map lines are 'm <flat> <v> <t>'", lineno)
        out.append(tuple(_int(x, lineno, "map field") for x in toks[1:]))
    return out


# --- vertex names -------------------------------------------------------------------


def parse_names(text: str) -> dict[int, str]:
    lines = _lines(text)
    _magic(lines, "nm")
    out: dict[int, str] = {}
    for lineno, toks in lines[1:]:
        if toks[0] != "v" or len(toks) != 3:
            raise FormatError("name lines are 'v <index> <label>'", lineno)
        v = _int(toks[1], lineno, "vertex index")
        if v in out:
            raise FormatError(f"vertex {v} named twice", lineno)
        out[v] = toks[2]
    return out


def emit_names(names: Iterable[str]) -> str:
    return "nm 1\n" + "".join(f"v {i} {label}\n" for i, label in enumerate(names))
