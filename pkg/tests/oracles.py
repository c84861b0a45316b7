"""Brute-force references written straight from the definitions.

Nothing here calls the solvers under test; only the graph value types are shared.
"""

from itertools import combinations, product


def edges_union(*edge_sets):
    out = set()
    for e in edge_sets:
        out |= set(e)
    return out


def brute_is_proper(c, edges):
    return all(c[u] != c[v] for u, v in edges)


def brute_chi_static(n, edges, kmax=None):
    edges = list(edges)
    for k in range(1 if n else 0, (kmax or n) + 1):
        for c in product(range(k), repeat=n):
            if brute_is_proper(c, edges):
                return k
    return None


def brute_bipartite(n, edges):
    return any(brute_is_proper(c, edges) for c in product(range(2), repeat=n))


def brute_degeneracy(n, edges):
    """Largest minimum degree over all non-empty induced subgraphs."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = 0
    for size in range(1, n + 1):
        for sub in combinations(range(n), size):
            s = set(sub)
            best = max(best, min(len(adj[v] & s) for v in sub))
    return best


def snap(g, t):
    return g.snapshots[t - 1] if 1 <= t <= g.T else frozenset()


def brute_temporal_colorable(g, k):
    """Reachable-set sweep over all k^n colourings per time."""
    n, T = g.n, g.T
    allc = list(product(range(k), repeat=n))
    smash = [edges_union(snap(g, t - 1), snap(g, t), snap(g, t + 1)) for t in range(1, T + 1)]
    reach = [c for c in allc if brute_is_proper(c, smash[0])]
    for t in range(2, T + 1):
        link = edges_union(snap(g, t - 1), snap(g, t))
        cand = [c for c in allc if brute_is_proper(c, smash[t - 1])]
        reach = [
            c
            for c in cand
            if any(all(p[u] != c[v] and p[v] != c[u] for u, v in link) for p in reach)
        ]
        if not reach:
            return False
    return bool(reach)


def brute_verify(g, per_time):
    """True iff the sequence is a temporal colouring, straight from the definition."""
    T = g.T
    for t in range(1, T + 1):
        c = per_time[t - 1]
        if not brute_is_proper(c, edges_union(snap(g, t - 1), snap(g, t), snap(g, t + 1))):
            return False
        if t < T:
            d = per_time[t]
            for u, v in edges_union(snap(g, t), snap(g, t + 1)):
                if c[u] == d[v] or c[v] == d[u]:
                    return False
    return True
