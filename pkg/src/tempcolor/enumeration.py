"""Exhaustive search for grow-pace-1 temporal graphs that need many colours.

Sequences ``G_1 .. G_T`` of admissible snapshots are walked depth first, each
step adding at most one edge and removing at most one. Along the way the set
``R_j`` of colourings that can legally be reached at time ``j`` is kept as a
bitset over all ``k**n`` colourings; a finished sequence needs more than
``k`` colours exactly when ``R_{T-1}`` is empty (``c_T = c_{T-1}`` always
extends a legal ``c_{T-1}``).

Palette symmetry keeps the per-step work small: ``R_j`` is closed under
renaming colours, so only colourings in first-occurrence normal form are
tested and their orbits are OR-ed in.

With canonical pruning only one ``G_1`` per isomorphism class is explored.
Relabelling vertices uniformly across time maps every sequence onto one
that starts with a representative, so nothing is lost; labelled counts are
recovered by weighting each representative with its orbit size.

Signatures have the form ``n:T:m_1.m_2...``: hex edge masks over the pairs
``(0,1), (0,2), ..., (n-2,n-1)`` in that order, minimised over all vertex
permutations.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .errors import BudgetExceeded, ContractError, FormatError
from .exact import DEFAULT_CONFIG, SearchConfig, solve_temporal, temporal_k_coloring
from .graph import StaticGraph, TemporalGraph, is_bipartite, is_forest, max_degree

CLASSES = ("degree", "bipartite", "forest")


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def mask_to_edges(n: int, mask: int) -> frozenset[tuple[int, int]]:
    return frozenset(p for i, p in enumerate(pair_list(n)) if mask >> i & 1)


def edges_to_mask(n: int, edges) -> int:
    index = {p: i for i, p in enumerate(pair_list(n))}
    mask = 0
    for e in edges:
        mask |= 1 << index[tuple(sorted(e))]
    return mask


def signature_of_masks(n: int, masks: Sequence[int]) -> str:
    return f"{n}:{len(masks)}:" + ".".join(f"{m:x}" for m in masks)


def decode_signature(sig: str) -> TemporalGraph:
    try:
        n_s, t_s, body = sig.split(":")
        n, T = int(n_s), int(t_s)
        masks = [int(m, 16) for m in body.split(".")]
    except ValueError as exc:
        raise FormatError(f"bad signature {sig!r}") from exc
    if len(masks) != T:
        raise FormatError(f"signature {sig!r} lists {len(masks)} snapshots, expected {T}")
    return TemporalGraph(n, tuple(mask_to_edges(n, m) for m in masks))


class _Relabeler:
    """Edge-mask images under every vertex permutation."""

    def __init__(self, n: int):
        pairs = pair_list(n)
        index = {p: i for i, p in enumerate(pairs)}
        self.maps = []
        for perm in permutations(range(n)):
            self.maps.append(
                [index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
            )

    @staticmethod
    def apply(pair_map: list[int], mask: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << pair_map[i]
            mask >>= 1
            i += 1
        return out

    def canonical(self, masks: Sequence[int]) -> tuple[int, ...]:
        """Lexicographically least image of a mask sequence."""
        return min(tuple(self.apply(pm, m) for m in masks) for pm in self.maps)

    def orbit(self, mask: int) -> set[int]:
        return {self.apply(pm, mask) for pm in self.maps}


def canonical_signature(g: TemporalGraph) -> str:
    """Signature of ``g`` shared by exactly its vertex relabellings."""
    masks = [edges_to_mask(g.n, e) for e in g.snapshots]
    return signature_of_masks(g.n, _Relabeler(g.n).canonical(masks))


def admissible(n: int, mask: int, delta: int, cls: str) -> bool:
    s = StaticGraph(n, mask_to_edges(n, mask))
    if max_degree(s) > delta:
        return False
    if cls == "bipartite":
        return is_bipartite(s) is not None
    if cls == "forest":
        return is_forest(s)
    return True


class _ColoringSpace:
    """All ``k**n`` colourings as bit positions; colouring ``i`` gives ``v`` the digit ``i // k**v % k``."""

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        pairs = pair_list(n)
        size = k**n
        self.full = (1 << size) - 1
        digits = [tuple(i // k**v % k for v in range(n)) for i in range(size)]
        # eq[u][b]: colourings giving u the colour b
        eq = [[0] * k for _ in range(n)]
        for i, c in enumerate(digits):
            for u in range(n):
                eq[u][c[u]] |= 1 << i
        self.eq = eq
        self.reps: list[tuple[int, ...]] = []
        self.rep_mono: list[int] = []
        self.rep_orbit: list[int] = []
        for c in digits:
            if not _first_occurrence(c):
                continue
            self.reps.append(c)
            self.rep_mono.append(
                sum(1 << j for j, (u, v) in enumerate(pairs) if c[u] == c[v])
            )
            orbit = 0
            used = max(c, default=-1) + 1
            for img in permutations(range(k), used):
                orbit |= 1 << sum(img[c[v]] * k**v for v in range(n))
            self.rep_orbit.append(orbit)
        self.adj_pairs = pairs

    def proper(self, s_mask: int) -> int:
        out = 0
        for mono, orbit in zip(self.rep_mono, self.rep_orbit):
            if not mono & s_mask:
                out |= orbit
        return out

    def step(self, reach: int, link_mask: int, s_mask: int) -> int:
        """Colourings proper on ``s_mask`` compatible on ``link_mask`` with a member of ``reach``."""
        if not reach:
            return 0
        link = [p for j, p in enumerate(self.adj_pairs) if link_mask >> j & 1]
        eq = self.eq
        out = 0
        for c, mono, orbit in zip(self.reps, self.rep_mono, self.rep_orbit):
            if mono & s_mask:
                continue
            forbid = 0
            for u, v in link:
                forbid |= eq[u][c[v]] | eq[v][c[u]]
            if reach & ~forbid:
                out |= orbit
        return out


def _first_occurrence(c: Sequence[int]) -> bool:
    nxt = 0
    for x in c:
        if x > nxt:
            return False
        if x == nxt:
            nxt += 1
    return True


@dataclass(frozen=True)
class Witness:
    signature: str
    chi: int

    @property
    def graph(self) -> TemporalGraph:
        return decode_signature(self.signature)


@dataclass(frozen=True)
class RootResult:
    root: str
    weight: int
    sequences: int
    witnesses: int
    signatures: tuple[str, ...]


@dataclass(frozen=True)
class EnumerationResult:
    """Outcome of an exhaustive run.

    ``labeled_sequences`` and ``labeled_witnesses`` count labelled sequences
    (orbit-weighted under pruning); ``witnesses`` lists one representative per
    isomorphism class, sorted by signature.
    """

    n: int
    T: int
    delta: int
    k: int
    cls: str
    roots: int
    labeled_sequences: int
    labeled_witnesses: int
    witnesses: tuple[Witness, ...]

    @property
    def canonical_count(self) -> int:
        return len(self.witnesses)


class _Search:
    def __init__(self, n: int, T: int, delta: int, k: int, cls: str):
        self.n, self.T, self.delta, self.k, self.cls = n, T, delta, k, cls
        m = n * (n - 1) // 2
        self.ok = [admissible(n, mask, delta, cls) for mask in range(1 << m)]
        self.m = m
        self.space = _ColoringSpace(n, k)
        self.relabel = _Relabeler(n)
        self._step = lru_cache(maxsize=1 << 16)(self.space.step)
        self._proper = lru_cache(maxsize=1 << 12)(self.space.proper)

    def successors(self, mask: int) -> Iterator[int]:
        present = [1 << j for j in range(self.m) if mask >> j & 1]
        absent = [1 << j for j in range(self.m) if not mask >> j & 1]
        for r in [0] + present:
            for a in [0] + absent:
                nxt = (mask ^ r) | a
                if self.ok[nxt]:
                    yield nxt

    def roots(self, canonical: bool) -> list[tuple[int, int]]:
        """``(mask, orbit size)`` for every first snapshot to explore."""
        masks = [mask for mask in range(1 << self.m) if self.ok[mask]]
        if not canonical:
            return [(mask, 1) for mask in masks]
        seen: set[int] = set()
        out = []
        for mask in masks:
            if mask in seen:
                continue
            orbit = self.relabel.orbit(mask)
            seen |= orbit
            out.append((min(orbit), len(orbit)))
        return sorted(out)

    def explore(
        self, root: int, deadline: float | None, node_budget: int | None
    ) -> tuple[int, int, list[str], int]:
        """Walk every sequence starting at ``root``.

        Returns the number of complete sequences, how many of them are
        witnesses, the witness signatures (canonical, deduplicated) and the
        number of search nodes visited.
        """
        T = self.T
        seq = [root]
        found: set[str] = set()
        counts = [0, 0, 0]  # sequences, nodes, witnesses

        def tick():
            counts[1] += 1
            if node_budget is not None and counts[1] > node_budget:
                raise BudgetExceeded(len(found), None, "enumeration node budget exhausted")
            if deadline is not None and counts[1] % 256 == 0 and time.time() > deadline:
                raise BudgetExceeded(len(found), None, "enumeration time budget exhausted")

        def leaf(reach_last: int | None):
            counts[0] += 1
            if reach_last == 0:
                counts[2] += 1
                found.add(signature_of_masks(self.n, self.relabel.canonical(seq)))

        if T == 1:
            counts[1] += 1
            leaf(self._proper(root))
            return counts[0], counts[2], sorted(found), counts[1]

        def rec(reach_prev: int | None):
            # seq holds G_1..G_j; reach_prev is R_{j-1} (None when j = 1)
            tick()
            j = len(seq)
            for nxt in self.successors(seq[-1]):
                seq.append(nxt)
                # seq is now G_1..G_{j+1}, so S_j and hence R_j are known
                s_mask = seq[j - 2] | seq[j - 1] | seq[j] if j >= 2 else seq[0] | seq[1]
                if reach_prev is None:
                    reach = self._proper(s_mask)
                else:
                    reach = self._step(reach_prev, seq[j - 2] | seq[j - 1], s_mask)
                if j + 1 == T:
                    leaf(reach)
                else:
                    rec(reach)
                seq.pop()

        rec(None)
        return counts[0], counts[2], sorted(found), counts[1]


def _explore_task(args) -> tuple[int, int, int, list[str], int]:
    n, T, delta, k, cls, root, deadline, budget = args
    search = _search_for(n, T, delta, k, cls)
    return (root, *search.explore(root, deadline, budget))


_SEARCH_CACHE: dict[tuple, _Search] = {}


def _search_for(n: int, T: int, delta: int, k: int, cls: str) -> _Search:
    key = (n, T, delta, k, cls)
    if key not in _SEARCH_CACHE:
        _SEARCH_CACHE.clear()
        _SEARCH_CACHE[key] = _Search(n, T, delta, k, cls)
    return _SEARCH_CACHE[key]


def _header(n: int, T: int, delta: int, k: int, cls: str, canonical: bool) -> str:
    return f"# enumerate n={n} T={T} delta={delta} k={k} class={cls} canonical={int(canonical)}"


def _read_checkpoint(path: str, header: str) -> dict[str, RootResult]:
    done: dict[str, RootResult] = {}
    if not os.path.exists(path):
        return done
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        return done
    if lines[0] != header:
        raise ContractError(f"checkpoint {path} was written for different parameters: {lines[0]!r}")
    for lineno, line in enumerate(lines[1:], 2):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise FormatError("checkpoint lines need 5 tab-separated fields", lineno)
        root, weight, seqs, wit, sigs = fields
        done[root] = RootResult(
            root, int(weight), int(seqs), int(wit), tuple(s for s in sigs.split(",") if s)
        )
    return done


def _checkpoint_line(r: RootResult) -> str:
    return f"{r.root}\t{r.weight}\t{r.sequences}\t{r.witnesses}\t{','.join(r.signatures)}"


def _check_params(n: int, T: int, delta: int, k: int, cls: str) -> None:
    if n < 1 or T < 1 or k < 1 or delta < 0:
        raise ContractError("n, T and k must be positive and delta non-negative")
    if cls not in CLASSES:
        raise ContractError(f"unknown snapshot class {cls!r}; expected one of {', '.join(CLASSES)}")
    if n > 7:
        raise ContractError("enumeration supports at most 7 vertices")


def enumerate_growpace1(
    n: int,
    T: int,
    delta: int,
    k: int,
    cls: str = "degree",
    cfg: SearchConfig = DEFAULT_CONFIG,
    checkpoint: str | None = None,
    resume: bool = False,
) -> EnumerationResult:
    """All grow-pace-1 sequences of ``delta``-bounded snapshots in ``cls`` that need more than ``k`` colours.

    ``cls`` restricts snapshots further to bipartite graphs or forests;
    ``"degree"`` imposes only the degree bound. With ``checkpoint`` every
    finished root is appended to that file, and ``resume`` skips roots
    already recorded there.
    """
    _check_params(n, T, delta, k, cls)
    search = _search_for(n, T, delta, k, cls)
    roots = search.roots(cfg.canonical)
    header = _header(n, T, delta, k, cls, cfg.canonical)
    done: dict[str, RootResult] = {}
    if checkpoint is not None and resume:
        done = _read_checkpoint(checkpoint, header)
    sink = None
    if checkpoint is not None:
        fresh = not (resume and os.path.exists(checkpoint) and os.path.getsize(checkpoint))
        sink = open(checkpoint, "w" if fresh else "a", encoding="utf-8")
        if fresh:
            sink.write(header + "\n")
            sink.flush()
    deadline = None if cfg.time_budget is None else time.time() + cfg.time_budget
    weights = {signature_of_masks(n, (mask,)): (mask, w) for mask, w in roots}
    todo = [mask for sig, (mask, _) in weights.items() if sig not in done]
    nodes_used = 0

    def record(mask: int, sequences: int, wit: int, sigs: list[str]) -> None:
        sig = signature_of_masks(n, (mask,))
        w = weights[sig][1]
        r = RootResult(sig, w, sequences * w, wit * w, tuple(sigs))
        done[sig] = r
        if sink is not None:
            sink.write(_checkpoint_line(r) + "\n")
            sink.flush()

    try:
        if cfg.workers > 1 and len(todo) > 1:
            args = [(n, T, delta, k, cls, mask, deadline, cfg.node_budget) for mask in todo]
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                for mask, sequences, wit, sigs, nodes in pool.map(_explore_task, args):
                    nodes_used += nodes
                    record(mask, sequences, wit, sigs)
            if cfg.node_budget is not None and nodes_used > cfg.node_budget:
                raise BudgetExceeded(0, None, "enumeration node budget exhausted")
        else:
            for mask in todo:
                left = None if cfg.node_budget is None else cfg.node_budget - nodes_used
                sequences, wit, sigs, nodes = search.explore(mask, deadline, left)
                nodes_used += nodes
                record(mask, sequences, wit, sigs)
    except BudgetExceeded as exc:
        # report progress over finished roots only; partial roots are redone on resume
        found = len({x for r in done.values() for x in r.signatures})
        reason = str(exc).split(" (", 1)[0]
        raise BudgetExceeded(found, None, f"{reason}; {len(done)} of {len(roots)} roots finished") from None
    finally:
        if sink is not None:
            sink.close()

    all_sigs = sorted({s for r in done.values() for s in r.signatures})
    witnesses = tuple(Witness(sig, _confirm(sig, k)) for sig in all_sigs)
    return EnumerationResult(
        n=n,
        T=T,
        delta=delta,
        k=k,
        cls=cls,
        roots=len(roots),
        labeled_sequences=sum(r.sequences for r in done.values()),
        labeled_witnesses=sum(r.witnesses for r in done.values()),
        witnesses=witnesses,
    )


def _confirm(sig: str, k: int) -> int:
    g = decode_signature(sig)
    if temporal_k_coloring(g, k) is not None:
        raise AssertionError(f"witness {sig} admits a temporal {k}-colouring")
    chi, _ = solve_temporal(g)
    return chi
