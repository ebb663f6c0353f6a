"""Biconnected components: frozen cases, baseline/tuned identity, oracle."""

import numpy as np

from dfskit.bcc import (
    _BccBaselineHooks,
    articulation_points,
    bcc_baseline,
    bcc_baseline_compiled,
    bcc_tuned,
)
from dfskit.dfs import BoundedStack, EngineKind, dfs_all
from dfskit.graph import EdgeList, build_undirected
from dfskit.oracle import bcc_oracle, trial_graphs
from dfskit.scc import SccLabeling, partitions_equal

ENGINES = [EngineKind.RECURSIVE, EngineKind.RECURSIVE_EDGE_STACK,
           EngineKind.ITERATIVE]


def _graph(n, edges):
    return build_undirected(EdgeList(n, edges))


def _same_partition(a, b):
    return partitions_equal(SccLabeling(a.edge_comp, a.bcc_count),
                            SccLabeling(b.edge_comp, b.bcc_count))


def test_triangle_is_one_block():
    g = _graph(3, [(0, 1), (1, 2), (2, 0)])
    for lab in (bcc_baseline(g), bcc_tuned(g), bcc_baseline_compiled(g)):
        assert lab.bcc_count == 1
        assert lab.edge_comp.tolist() == [0, 0, 0]


def test_path_bridges_close_deepest_first():
    g = _graph(3, [(0, 1), (1, 2)])
    lab = bcc_baseline(g)
    assert lab.bcc_count == 2
    assert lab.edge_comp.tolist() == [1, 0]
    assert np.array_equal(bcc_tuned(g).edge_comp, lab.edge_comp)


def test_bowtie_two_blocks_one_cut_vertex():
    g = _graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    lab = bcc_baseline(g)
    assert lab.bcc_count == 2
    assert lab.edge_comp.tolist() == [1, 1, 1, 0, 0, 0]
    assert _same_partition(lab, bcc_oracle(g))
    assert articulation_points(g, lab) == {2}


def test_parallel_edges_share_a_block():
    g = _graph(2, [(0, 1), (0, 1)])
    lab = bcc_baseline(g)
    assert lab.bcc_count == 1
    assert lab.edge_comp.tolist() == [0, 0]
    assert np.array_equal(bcc_tuned(g).edge_comp, lab.edge_comp)


def test_self_loop_is_its_own_block():
    g = _graph(2, [(0, 0), (0, 1)])
    lab = bcc_baseline(g)
    assert lab.bcc_count == 2
    assert lab.edge_comp.tolist() == [0, 1]
    assert np.array_equal(bcc_tuned(g).edge_comp, lab.edge_comp)


def test_empty_and_edgeless():
    for n in (0, 3):
        g = _graph(n, [])
        for lab in (bcc_baseline(g), bcc_tuned(g)):
            assert lab.bcc_count == 0
            assert lab.edge_comp.shape == (0,)
        assert articulation_points(g, bcc_baseline(g)) == set()


def test_corpus_baseline_tuned_identical():
    """Same labels, element for element, across all engines and the
    compiled twin; label ids are contiguous and the edge stack drains."""
    for el in trial_graphs(300, 32, seed=5, undirected=True, max_m=96):
        g = build_undirected(el)
        base = bcc_baseline(g)
        assert np.array_equal(bcc_baseline_compiled(g).edge_comp,
                              base.edge_comp)
        for engine in ENGINES:
            lab = bcc_tuned(g, engine)
            assert np.array_equal(lab.edge_comp, base.edge_comp)
            assert lab.bcc_count == base.bcc_count
        if g.m:
            assert base.edge_comp.min() >= 0
            assert len(np.unique(base.edge_comp)) == base.bcc_count
            assert base.edge_comp.max() == base.bcc_count - 1


def test_corpus_hook_state_invariants():
    for el in trial_graphs(100, 24, seed=13, undirected=True, max_m=64):
        g = build_undirected(el)
        hooks = _BccBaselineHooks(g)
        dfs_all(g, hooks, edge_stack=BoundedStack(2 * g.m))
        assert hooks.estack.size() == 0
        assert hooks.estack.peak <= g.m
        assert hooks.path.size() == 0
        # every cursor consumed its whole adjacency slice
        assert hooks.cursor == g.vertex_offset[1:].tolist()


def test_corpus_oracle_agreement():
    for el in trial_graphs(400, 10, seed=7, undirected=True, max_m=20):
        g = build_undirected(el)
        assert _same_partition(bcc_baseline(g), bcc_oracle(g))


def test_oracle_agreement_fixed_example():
    el = next(iter(trial_graphs(1, 8, seed=11, undirected=True, max_m=12)))
    g = build_undirected(el)
    base = bcc_baseline(g)
    assert _same_partition(base, bcc_oracle(g))
    assert np.array_equal(bcc_tuned(g).edge_comp, base.edge_comp)


def test_articulation_points_examples():
    # path 0-1-2-3: the interior vertices cut
    g = _graph(4, [(0, 1), (1, 2), (2, 3)])
    assert articulation_points(g, bcc_baseline(g)) == {1, 2}
    # cycle: nothing cuts
    g = _graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert articulation_points(g, bcc_baseline(g)) == set()
    # the rule is "incident to >= 2 blocks": a self-loop block beside a
    # bridge block marks the shared vertex
    g = _graph(2, [(0, 0), (0, 1)])
    assert articulation_points(g, bcc_baseline(g)) == {0}
