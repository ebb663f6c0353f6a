"""The brute-force oracles themselves (closure and cycle enumeration)."""

import numpy as np
import pytest

from dfskit.graph import EdgeList, build_digraph, build_undirected
from dfskit.oracle import (
    BCC_ORACLE_MAX_M,
    BCC_ORACLE_MAX_N,
    ORACLE_MAX_N,
    OracleCapError,
    bcc_oracle,
    reachability_closure,
    scc_oracle,
    trial_graphs,
)


def test_reachability_two_cycle():
    g = build_digraph(EdgeList(2, [(0, 1), (1, 0)]))
    r = reachability_closure(g)
    assert r.reach.all()


def test_reachability_single_edge():
    g = build_digraph(EdgeList(2, [(0, 1)]))
    r = reachability_closure(g).reach
    assert r[0, 1] and not r[1, 0]
    assert r[0, 0] and r[1, 1]  # reflexive by definition


def test_reachability_fixed_point():
    """One more relaxation round changes nothing: the matrix is closed."""
    for seed in (1, 2, 3):
        g = build_digraph(EdgeList(8, np.random.Generator(
            np.random.PCG64(seed)).integers(0, 8, size=(14, 2)).tolist()))
        r = reachability_closure(g).reach
        again = r.copy()
        for k in range(g.n):
            again |= np.outer(again[:, k], again[k, :])
        assert np.array_equal(r, again)


def test_reachability_cap():
    g = build_digraph(EdgeList(ORACLE_MAX_N + 1, []))
    with pytest.raises(OracleCapError):
        reachability_closure(g)
    # at the cap itself it must still run
    reachability_closure(build_digraph(EdgeList(ORACLE_MAX_N, [])))


def test_scc_oracle_examples():
    tri = scc_oracle(build_digraph(EdgeList(3, [(0, 1), (1, 2), (2, 0)])))
    assert tri.scc_count == 1 and tri.comp_num.tolist() == [0, 0, 0]

    five = scc_oracle(build_digraph(EdgeList(
        5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 3)])))
    assert five.scc_count == 2
    assert five.comp_num.tolist() == [0, 0, 0, 1, 1]

    lone = scc_oracle(build_digraph(EdgeList(4, [])))
    assert lone.scc_count == 4
    assert lone.comp_num.tolist() == [0, 1, 2, 3]


def test_scc_oracle_label_invariants():
    for el in trial_graphs(50, 20, seed=9):
        lab = scc_oracle(build_digraph(el))
        assert lab.comp_num.shape == (el.n,)
        assert lab.comp_num.min() == 0 and lab.comp_num.max() == lab.scc_count - 1
        assert len(np.unique(lab.comp_num)) == lab.scc_count


def test_bcc_oracle_examples():
    tri = bcc_oracle(build_undirected(EdgeList(3, [(0, 1), (1, 2), (2, 0)])))
    assert tri.bcc_count == 1

    two = bcc_oracle(build_undirected(EdgeList(4, [(0, 1), (2, 3)])))
    assert two.bcc_count == 2
    assert two.edge_comp.tolist() == [0, 1]

    bowtie = bcc_oracle(build_undirected(EdgeList(
        5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])))
    assert bowtie.bcc_count == 2
    assert bowtie.edge_comp.tolist() == [0, 0, 0, 1, 1, 1]


def test_bcc_oracle_multigraph_conventions():
    # parallel edges form a cycle; a self-loop is its own component
    g = build_undirected(EdgeList(3, [(0, 1), (0, 1), (1, 1), (1, 2)]))
    lab = bcc_oracle(g)
    assert lab.edge_comp[0] == lab.edge_comp[1]
    assert lab.edge_comp[2] not in (lab.edge_comp[0], lab.edge_comp[3])
    assert lab.edge_comp[3] != lab.edge_comp[0]
    assert lab.bcc_count == 3


def test_bcc_oracle_caps():
    with pytest.raises(OracleCapError):
        bcc_oracle(build_undirected(EdgeList(BCC_ORACLE_MAX_N + 1, [])))
    big = [(i % 5, (i + 1) % 5) for i in range(BCC_ORACLE_MAX_M + 1)]
    with pytest.raises(OracleCapError):
        bcc_oracle(build_undirected(EdgeList(5, big)))


def test_trial_graphs_deterministic_and_bounded():
    a = list(trial_graphs(30, 12, seed=4))
    b = list(trial_graphs(30, 12, seed=4))
    assert len(a) == 30
    assert all(x == y for x, y in zip(a, b))
    assert all(1 <= el.n <= 12 and el.m <= 4 * el.n for el in a)

    u = list(trial_graphs(30, 10, seed=4, undirected=True, max_m=20))
    assert all(el.m <= 20 for el in u)
