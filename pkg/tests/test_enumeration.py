import os

import pytest

from tempcolor.enumeration import (
    canonical_signature,
    decode_signature,
    enumerate_growpace1,
)
from tempcolor.errors import BudgetExceeded, ContractError
from tempcolor.exact import SearchConfig, chi_temporal
from tempcolor.gadgets import build
from tempcolor.graph import grow_pace, is_forest, max_degree, snapshot


def test_p4_family_has_witnesses():
    res = enumerate_growpace1(4, 4, 2, 3, "degree")
    sigs = {w.signature for w in res.witnesses}
    assert canonical_signature(build("p4_growpace").graph) in sigs
    for w in res.witnesses:
        g = w.graph
        assert grow_pace(g) <= 1 and w.chi == chi_temporal(g) == 4
        assert all(max_degree(snapshot(g, t)) <= 2 for t in range(1, 5))
    assert [w.signature for w in res.witnesses] == sorted(sigs)


def test_trivial_empty():
    res = enumerate_growpace1(2, 1, 0, 1)
    assert res.witnesses == () and res.labeled_sequences == 1


def test_delta3_family_has_witnesses():
    res = enumerate_growpace1(5, 4, 3, 4, "degree")
    sigs = {w.signature for w in res.witnesses}
    assert canonical_signature(build("delta3_growpace").graph) in sigs
    assert all(w.chi == 5 for w in res.witnesses)


@pytest.mark.parametrize("cls", ["degree", "bipartite", "forest"])
def test_pruning_and_workers_do_not_change_results(cls):
    base = enumerate_growpace1(4, 4, 2, 3, cls)
    flat = enumerate_growpace1(4, 4, 2, 3, cls, SearchConfig(canonical=False))
    wide = enumerate_growpace1(4, 4, 2, 3, cls, SearchConfig(workers=2))
    assert base.witnesses == flat.witnesses == wide.witnesses
    assert base.labeled_witnesses == flat.labeled_witnesses == wide.labeled_witnesses
    assert base.labeled_sequences == flat.labeled_sequences == wide.labeled_sequences


def test_class_restriction():
    res = enumerate_growpace1(4, 4, 2, 3, "forest")
    for w in res.witnesses:
        assert all(is_forest(snapshot(w.graph, t)) for t in range(1, 5))


def test_labeled_counts_against_brute_force():
    # every labelled sequence on 3 vertices, T = 3, checked one by one
    from itertools import product

    from tempcolor.graph import TemporalGraph
    from tempcolor.exact import temporal_k_coloring

    pairs = [(0, 1), (0, 2), (1, 2)]
    graphs = [frozenset(p for i, p in enumerate(pairs) if m >> i & 1) for m in range(8)]
    total = witnesses = 0
    for seq in product(graphs, repeat=3):
        g = TemporalGraph(3, seq)
        if grow_pace(g) > 1:
            continue
        total += 1
        witnesses += temporal_k_coloring(g, 2) is None
    res = enumerate_growpace1(3, 3, 2, 2)
    assert (res.labeled_sequences, res.labeled_witnesses) == (total, witnesses)


def test_signature_round_trip_and_invariance():
    g = build("p4_growpace").graph
    sig = canonical_signature(g)
    assert canonical_signature(decode_signature(sig)) == sig
    assert canonical_signature(g.relabel([2, 0, 3, 1])) == sig


def test_checkpoint_resume(tmp_path):
    path = str(tmp_path / "ck.txt")
    full = enumerate_growpace1(4, 4, 2, 3, checkpoint=path)
    with open(path) as fh:
        lines = fh.read().splitlines()
    assert lines[0].startswith("# enumerate") and len(lines) == 1 + full.roots
    # drop the last two roots and resume
    with open(path, "w") as fh:
        fh.write("\n".join(lines[:-2]) + "\n")
    resumed = enumerate_growpace1(4, 4, 2, 3, checkpoint=path, resume=True)
    assert resumed == full
    with open(path) as fh:
        assert len(fh.read().splitlines()) == len(lines)


def test_checkpoint_parameter_mismatch(tmp_path):
    path = str(tmp_path / "ck.txt")
    enumerate_growpace1(3, 2, 2, 2, checkpoint=path)
    with pytest.raises(ContractError):
        enumerate_growpace1(3, 3, 2, 2, checkpoint=path, resume=True)


def test_budget_then_resume(tmp_path):
    path = str(tmp_path / "ck.txt")
    with pytest.raises(BudgetExceeded):
        enumerate_growpace1(4, 4, 2, 3, cfg=SearchConfig(node_budget=50), checkpoint=path)
    assert os.path.exists(path)
    resumed = enumerate_growpace1(4, 4, 2, 3, checkpoint=path, resume=True)
    assert resumed == enumerate_growpace1(4, 4, 2, 3)


def test_bad_parameters():
    with pytest.raises(ContractError):
        enumerate_growpace1(0, 2, 1, 1)
    with pytest.raises(ContractError):
        enumerate_growpace1(3, 2, 1, 1, "tree")


@pytest.mark.skipif(not os.environ.get("TEMPCOLOR_LONG"), reason="opt-in long run (about 2-3 minutes)")
def test_six_vertices_never_need_six_colors():
    res = enumerate_growpace1(6, 4, 4, 5, "degree")
    assert res.witnesses == () and res.labeled_witnesses == 0
