import random
from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tempcolor.graph import StaticGraph, TemporalGraph

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large]
)
settings.load_profile("default")


@st.composite
def static_graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return StaticGraph(n, frozenset(chosen))


@st.composite
def temporal_graphs(draw, min_n=1, max_n=5, max_T=4):
    n = draw(st.integers(min_n, max_n))
    T = draw(st.integers(1, max_T))
    pairs = list(combinations(range(n), 2))
    snaps = []
    for _ in range(T):
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        snaps.append(frozenset(chosen))
    return TemporalGraph(n, tuple(snaps))


def random_temporal(rng: random.Random, n: int, T: int, p: float) -> TemporalGraph:
    pairs = list(combinations(range(n), 2))
    return TemporalGraph(n, tuple(frozenset(e for e in pairs if rng.random() < p) for _ in range(T)))


def random_growpace1(rng: random.Random, n: int, T: int, delta: int) -> TemporalGraph:
    """Random walk over delta-bounded graphs, one addition and one removal at most per step."""
    pairs = list(combinations(range(n), 2))

    def ok(edges):
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        return max(deg, default=0) <= delta

    cur: set = set()
    for e in rng.sample(pairs, len(pairs)):
        if rng.random() < 0.5 and ok(cur | {e}):
            cur.add(e)
    snaps = [frozenset(cur)]
    for _ in range(T - 1):
        nxt = set(cur)
        if nxt and rng.random() < 0.7:
            nxt.discard(rng.choice(sorted(nxt)))
        absent = [e for e in pairs if e not in nxt]
        if absent and rng.random() < 0.8:
            e = rng.choice(absent)
            if ok(nxt | {e}):
                nxt.add(e)
        cur = nxt
        snaps.append(frozenset(cur))
    return TemporalGraph(n, tuple(snaps))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
