"""Command-line front end.

Exit codes: 0 success or yes, 1 a legitimate negative (violation, not
2-colourable), 2 bad input or violated precondition, 3 budget exhausted.
The first line printed to stdout is always a single machine-readable record.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import constructive as cons
from . import io
from .coloring import ColoringSeq, colors_used, verify
from .errors import BudgetExceeded, ContractError
from .exact import SearchConfig, solve_temporal
from .gadgets import GADGETS, build
from .graph import TemporalGraph, grow_pace, max_degree, snapshot
from .reduction import decide_2colorable, to_col2, to_static

BUDGET_ENV = "TGCOLOR_BUDGET"

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_graph(path: str) -> TemporalGraph:
    return io.parse_tg(_read(path))


def _names_for(graph_path: str, explicit: str | None) -> dict[int, str]:
    if explicit:
        return io.parse_names(_read(explicit))
    for cand in (Path(graph_path).with_suffix(".names"), Path(graph_path + ".names")):
        if cand.is_file():
            return io.parse_names(cand.read_text(encoding="utf-8"))
    return {}


def _graph_delta(g: TemporalGraph) -> int:
    return max(max_degree(snapshot(g, t)) for t in range(1, g.T + 1))


# --- subcommands ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    seq = io.parse_tc(_read(args.coloring), n=g.n, T=g.T)
    verdict = verify(g, seq)
    if verdict.ok:
        print(f"OK k={seq.palette_size}")
        return EXIT_OK
    names = _names_for(args.graph, args.names)
    u, v = verdict.edge
    print(f"VIOLATION {verdict.status} t={verdict.time} edge={u}-{v}")
    if names:
        print(f"edge {names.get(u, u)}-{names.get(v, v)}")
    print(verdict.detail)
    return EXIT_NO


METHODS: dict[str, tuple[str, Callable]] = {}


def _method(name: str, bound: str):
    def wrap(fn):
        METHODS[name] = (bound, fn)
        return fn

    return wrap


@_method("cube", "k^3")
def _color_cube(g: TemporalGraph, delta: int | None) -> ColoringSeq:
    return cons.color_cube(g, cons.snapshot_colorings(g))


@_method("double", "2k")
def _color_double(g: TemporalGraph, delta: int | None) -> ColoringSeq:
    cs, k = cons.smash_colorings(g)
    return cons.color_double(g, cs, k)


@_method("dup-square", "k^2")
def _color_dup_square(g: TemporalGraph, delta: int | None) -> ColoringSeq:
    return cons.color_square_duplicated(g, cons.dedup_colorings(g))


@_method("bounded", "5D+1")
def _color_bounded(g: TemporalGraph, delta: int | None) -> ColoringSeq:
    return cons.color_bounded_degree(g, _graph_delta(g) if delta is None else delta)


@_method("dup-bounded", "3D+1")
def _color_dup_bounded(g: TemporalGraph, delta: int | None) -> ColoringSeq:
    return cons.color_bounded_degree_duplicated(g, _graph_delta(g) if delta is None else delta)


@_method("growpace1", "D+2")
def _color_growpace1(g: TemporalGraph, delta: int | None) -> ColoringSeq:
    return cons.color_growpace1(g, _graph_delta(g) if delta is None else delta)


def cmd_color(args) -> int:
    g = _load_graph(args.graph)
    bound, fn = METHODS[args.method]
    seq = fn(g, args.delta)
    verdict = verify(g, seq)
    if not verdict.ok:
        raise RuntimeError(f"{args.method} produced an invalid colouring: {verdict.detail}")
    text = io.emit_tc(seq)
    report = f"OK method={args.method} palette={seq.palette_size} used={colors_used(seq)} bound={bound}"
    if args.output:
        _write(args.output, text)
        print(report)
    else:
        sys.stdout.write(text)
        print(report, file=sys.stderr)
    return EXIT_OK


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ContractError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    return value


def cmd_chi(args) -> int:
    g = _load_graph(args.graph)
    cfg = SearchConfig(node_budget=_budget(args), time_budget=args.time_budget)
    chi, seq = solve_temporal(g, cfg, route=args.route)
    print(chi)
    if args.output:
        _write(args.output, io.emit_tc(seq))
    return EXIT_OK


def cmd_two_colorable(args) -> int:
    g = _load_graph(args.graph)
    ok, seq = decide_2colorable(g)
    if not ok:
        print("NO")
        return EXIT_NO
    print("YES")
    text = io.emit_tc(seq)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _load_graph(args.graph)
    if args.static:
        red = to_static(g)
        graph, mapping = red.graph, io.emit_static_map(red)
    else:
        red = to_col2(g)
        graph, mapping = red.graph, io.emit_col2_map(red)
    text = io.emit_sg(graph)
    map_path = args.map
    if args.output:
        _write(args.output, text)
        map_path = map_path or str(Path(args.output).with_suffix(".map"))
    else:
        sys.stdout.write(text)
    if map_path:
        _write(map_path, mapping)
    return EXIT_OK


def cmd_grow_pace(args) -> int:
    print(grow_pace(_load_graph(args.graph)))
    return EXIT_OK


def cmd_gadget(args) -> int:
    gi = build(args.name, d=args.d, delta=args.delta)
    text = io.emit_tg(gi.graph)
    if not args.output:
        sys.stdout.write(text)
        return EXIT_OK
    out = Path(args.output)
    _write(str(out), text)
    _write(str(out.with_suffix(".names")), io.emit_names(gi.vertex_names))
    written = [str(out), str(out.with_suffix(".names"))]
    if gi.fixed_coloring:
        palette = max(max(c) for c in gi.fixed_coloring.values()) + 1
        _write(str(out.with_suffix(".tc")), io.emit_tc_partial(palette, gi.fixed_coloring))
        written.append(str(out.with_suffix(".tc")))
    print(f"OK gadget={gi.name} n={gi.graph.n} T={gi.graph.T} files={','.join(written)}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .enumeration import enumerate_growpace1

    if args.resume and not args.out:
        raise ContractError("--resume needs --out, which holds the checkpoint")
    cfg = SearchConfig(
        node_budget=_budget(args),
        time_budget=args.time_budget,
        workers=args.workers,
        canonical=not args.no_canonical,
    )
    checkpoint = None
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        checkpoint = os.path.join(args.out, "checkpoint.txt")
    res = enumerate_growpace1(
        args.n, args.T, args.delta, args.colors, args.cls, cfg, checkpoint=checkpoint, resume=args.resume
    )
    index = []
    for i, w in enumerate(res.witnesses, 1):
        line = f"witness {w.signature} chi={w.chi}"
        if args.out:
            path = os.path.join(args.out, f"witness_{i:04d}.tg")
            _write(path, io.emit_tg(w.graph))
            line += f" file={path}"
        index.append(f"{w.signature} {w.chi}")
        print(line, flush=True)
    if args.out:
        _write(os.path.join(args.out, "index.txt"), "".join(x + "\n" for x in index))
    print(
        f"count canonical={res.canonical_count} labeled={res.labeled_witnesses} "
        f"sequences={res.labeled_sequences} roots={res.roots}"
    )
    return EXIT_OK


# --- parser -------------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tempcolor", description="Temporal graph colouring toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="check a colouring sequence against a temporal graph")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--names", help="vertex-name sidecar (default: <graph>.names if present)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("color", help="colour with one of the constructive algorithms")
    s.add_argument("graph")
    s.add_argument("--method", required=True, choices=sorted(METHODS))
    s.add_argument("--delta", type=_non_negative, help="degree bound (default: the graph's maximum degree)")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("chi", help="exact temporal chromatic number")
    s.add_argument("graph")
    s.add_argument("--budget", type=_positive, help=f"search node budget (default: ${BUDGET_ENV})")
    s.add_argument("--time-budget", type=float)
    s.add_argument("--route", choices=("static", "direct"), default="static")
    s.add_argument("-o", "--output", help="also write an optimal colouring sequence")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("two-colorable", help="decide temporal 2-colourability")
    s.add_argument("graph")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_two_colorable)

    s = sub.add_parser("reduce", help="emit a static reduction")
    s.add_argument("graph")
    kind = s.add_mutually_exclusive_group(required=True)
    kind.add_argument("--static", action="store_true")
    kind.add_argument("--col2", action="store_true")
    s.add_argument("-o", "--output")
    s.add_argument("--map", help="map sidecar path (default with -o: <output>.map)")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("grow-pace", help="print the grow pace")
    s.add_argument("graph")
    s.set_defaults(func=cmd_grow_pace)

    s = sub.add_parser("gadget", help="emit a lower-bound instance")
    s.add_argument("name", choices=sorted(GADGETS))
    s.add_argument("--d", type=_positive)
    s.add_argument("--delta", type=_positive)
    s.add_argument("-o", "--output", help="graph path; .names and .tc sidecars are written next to it")
    s.set_defaults(func=cmd_gadget)

    s = sub.add_parser("enumerate", help="search grow-pace-1 graphs needing more than --colors colours")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--T", type=_positive, required=True)
    s.add_argument("--delta", type=_non_negative, required=True)
    s.add_argument("--colors", type=_positive, required=True)
    s.add_argument("--class", dest="cls", choices=("degree", "bipartite", "forest"), default="degree")
    s.add_argument("--workers", type=_positive, default=1)
    s.add_argument("--out", help="directory for witness files, index and checkpoint")
    s.add_argument("--resume", action="store_true")
    s.add_argument("--no-canonical", action="store_true", help="explore every labelled first snapshot")
    s.add_argument("--budget", type=_positive)
    s.add_argument("--time-budget", type=float)
    s.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        upper = "" if exc.upper is None else f" upper={exc.upper}"
        print(f"BUDGET lower={exc.lower}{upper}")
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except (ContractError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
