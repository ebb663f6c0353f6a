"""The generic DFS driver: transcripts, engines, stacks."""

import sys

import numpy as np
import pytest

from dfskit.dfs import (
    BoundedStack,
    DfsHooks,
    EngineKind,
    StackCapacityError,
    dfs_all,
    push_out_edges_reversed,
)
from dfskit.graph import EdgeList, build_digraph, random_digraph

ENGINES = [EngineKind.RECURSIVE, EngineKind.RECURSIVE_EDGE_STACK,
           EngineKind.ITERATIVE]


class TranscriptHooks(DfsHooks):
    """Records every hook call; owns the visited marks."""

    def __init__(self, n):
        self.seen = [False] * n
        self.events = []

    def init(self):
        self.events.append(("init",))

    def tree_edge(self, v):
        self.seen[v] = True
        self.events.append(("tree_edge", v))

    def non_tree_edge(self, u, v):
        self.events.append(("non_tree_edge", u, v))

    def finish_tree_edge(self, u, v):
        self.events.append(("finish_tree_edge", u, v))

    def finish_node(self, v):
        self.events.append(("finish_node", v))

    def is_unvisited(self, v):
        return not self.seen[v]


def _transcript(g, engine, edge_stack=None):
    hooks = TranscriptHooks(g.n)
    dfs_all(g, hooks, engine, edge_stack=edge_stack)
    return hooks.events


def _corpus(count, max_n=32, max_m=128):
    graphs = []
    for seed in range(count):
        rng = np.random.Generator(np.random.PCG64(seed))
        n = 1 + seed % max_n
        m = int(rng.integers(0, max_m + 1))
        graphs.append(build_digraph(random_digraph(n, m, seed)))
    return graphs


def test_transcript_single_node():
    g = build_digraph(EdgeList(1, []))
    for engine in ENGINES:
        assert _transcript(g, engine) == [
            ("init",), ("tree_edge", 0), ("finish_node", 0)]


def test_transcript_single_edge():
    g = build_digraph(EdgeList(2, [(0, 1)]))
    want = [("init",), ("tree_edge", 0), ("tree_edge", 1),
            ("finish_node", 1), ("finish_tree_edge", 0, 1),
            ("finish_node", 0)]
    for engine in ENGINES:
        assert _transcript(g, engine) == want


def test_engines_emit_identical_transcripts():
    for g in _corpus(200):
        reference = _transcript(g, EngineKind.RECURSIVE)
        assert _transcript(g, EngineKind.RECURSIVE_EDGE_STACK) == reference
        assert _transcript(g, EngineKind.ITERATIVE) == reference


def test_transcript_event_counts():
    """One tree_edge + one finish_node per node; each edge exactly one event."""
    for g in _corpus(40):
        events = _transcript(g, EngineKind.ITERATIVE)
        tree = [e[1] for e in events if e[0] == "tree_edge"]
        finish = [e[1] for e in events if e[0] == "finish_node"]
        assert sorted(tree) == list(range(g.n))
        assert sorted(finish) == list(range(g.n))
        # multiset of scanned edges == multiset of graph edges
        scanned = []
        for e in events:
            if e[0] == "non_tree_edge" or e[0] == "finish_tree_edge":
                scanned.append((e[1], e[2]))
        graph_edges = []
        for v in range(g.n):
            graph_edges += [(v, int(w)) for w in g.out_edges(v)]
        assert sorted(scanned) == sorted(graph_edges)
        # a descent's finish_tree_edge(u, v) comes after finish_node(v)
        finished = set()
        for e in events:
            if e[0] == "finish_node":
                finished.add(e[1])
            elif e[0] == "finish_tree_edge":
                assert e[2] in finished


def test_roots_ascend_and_adjacency_order_is_kept():
    # two components rooted at 0 and 3; node 0's out-edges in input order
    g = build_digraph(EdgeList(5, [(0, 2), (0, 1), (3, 4)]))
    events = _transcript(g, EngineKind.ITERATIVE)
    tree = [e[1] for e in events if e[0] == "tree_edge"]
    assert tree == [0, 2, 1, 3, 4]


def test_bounded_stack_semantics():
    st = BoundedStack(2)
    st.push("a")
    st.push("b")
    assert st.top() == "b" and len(st) == 2
    with pytest.raises(StackCapacityError):
        st.push("c")
    assert st.pop() == "b" and st.pop() == "a"
    assert st.size() == 0
    assert st.pushes == 2 and st.peak == 2


def test_push_out_edges_reversed_watermark():
    g = build_digraph(EdgeList(5, [(0, 3), (0, 1), (0, 4)]))
    es = BoundedStack(10)
    mark = push_out_edges_reversed(g, 0, es)
    assert mark == 0
    assert es._items == [4, 1, 3]  # bottom to top
    assert [es.pop(), es.pop(), es.pop()] == [3, 1, 4]

    es.push(9)
    mark = push_out_edges_reversed(g, 2, es)  # outdeg 0
    assert mark == 1 and es.size() == 1


def test_edge_stack_conservation():
    for g in _corpus(50):
        for engine in (EngineKind.RECURSIVE_EDGE_STACK, EngineKind.ITERATIVE):
            es = BoundedStack(g.m)
            dfs_all(g, TranscriptHooks(g.n), engine, edge_stack=es)
            assert es.pushes == g.m
            assert es.size() == 0
            assert es.peak <= g.m


def test_iterative_engine_ignores_recursion_limit():
    n = 3000
    g = build_digraph(EdgeList(n, [(i, i + 1) for i in range(n - 1)]))
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(128)
    try:
        hooks = TranscriptHooks(n)
        dfs_all(g, hooks, EngineKind.ITERATIVE)
        assert sum(1 for e in hooks.events if e[0] == "finish_node") == n
    finally:
        sys.setrecursionlimit(old)


def test_recursive_engine_provisions_deep_stack():
    # a path graph deeper than the default recursion limit still completes
    n = 5000
    g = build_digraph(EdgeList(n, [(i, i + 1) for i in range(n - 1)]))
    hooks = TranscriptHooks(n)
    dfs_all(g, hooks, EngineKind.RECURSIVE)
    assert hooks.events[-1] == ("finish_node", 0)
