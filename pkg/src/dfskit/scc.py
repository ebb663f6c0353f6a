"""Strongly connected components, five ways.

Single-pass family (Tarjan and Cheriyan-Mehlhorn-Gabow, each in a textbook
baseline and a cache-tuned form) plus two-pass Kosaraju-Sharir.  All return
an :class:`SccLabeling` and, for a given graph, the four single-pass variants
produce element-wise identical ``comp_num`` arrays: they close components at
the same finish events and number them in closing order (reverse topological).
Kosaraju-Sharir numbers components topologically instead.

The baselines are literal hook instantiations over :mod:`dfskit.dfs` with
separate visited / DFS-number / lowpoint arrays; the tuned forms run compiled
kernels that overlay all per-node state on one signed label array:

* CMG encoding: -1 unvisited; open nodes carry negated DFS numbers handed
  out downward from -2 (so "discovered earlier" means "label greater");
  closed nodes hold their component id (>= 0).
* Tarjan encoding: -1 unvisited; open values count upward from -(n+1) (so
  "discovered earlier" means "label smaller"); closed is again >= 0.

Both encodings make the single comparison against -1 double as the visited
test, the open test, and the DFS-order comparison, which is the point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from .dfs import (
    COMPILED_FRAME_BYTES,
    BoundedStack,
    DfsHooks,
    EngineKind,
    call_with_stack_headroom,
    dfs_all,
)
from .graph import StaticDigraph, reverse


@dataclass(frozen=True, eq=False)
class SccLabeling:
    """Component number per node plus the component count.

    Invariants: every entry of comp_num lies in [0, scc_count) and every
    value in that range occurs; two nodes share a value iff they are
    mutually reachable.
    """

    comp_num: np.ndarray  # int32, length n
    scc_count: int


# ---------------------------------------------------------------------------
# Baselines: literal hook instantiations with separate plain arrays
# ---------------------------------------------------------------------------


class _TarjanBaselineHooks(DfsHooks):
    """Tarjan with a node-valued lowpoint array and an open stack."""

    def __init__(self, n: int):
        self.visited = [False] * n
        self.open_flag = [False] * n
        self.dfs_num = [0] * n
        self.low_node = list(range(n))
        self.open_stack = BoundedStack(n)
        self.comp_num = np.full(n, -1, dtype=np.int32)
        self.scc_count = 0
        self.dfs_count = 0

    def tree_edge(self, v: int) -> None:
        self.visited[v] = True
        self.dfs_num[v] = self.dfs_count
        self.dfs_count += 1
        self.low_node[v] = v
        self.open_flag[v] = True
        self.open_stack.push(v)

    def finish_tree_edge(self, u: int, w: int) -> None:
        if self.dfs_num[self.low_node[w]] < self.dfs_num[self.low_node[u]]:
            self.low_node[u] = self.low_node[w]

    def non_tree_edge(self, u: int, w: int) -> None:
        if self.open_flag[w] and self.dfs_num[w] < self.dfs_num[self.low_node[u]]:
            self.low_node[u] = w

    def finish_node(self, v: int) -> None:
        if self.low_node[v] != v:
            return
        while True:
            w = self.open_stack.pop()
            self.comp_num[w] = self.scc_count
            self.open_flag[w] = False
            if w == v:
                break
        self.scc_count += 1

    def is_unvisited(self, v: int) -> bool:
        return not self.visited[v]


class _CmgBaselineHooks(DfsHooks):
    """Cheriyan-Mehlhorn-Gabow with node-valued roots and open stacks.

    A non-tree edge to an open node w merges roots: every candidate root
    discovered after w is popped.  A node closing while it is still the top
    root labels one component.
    """

    def __init__(self, n: int):
        self.visited = [False] * n
        self.open_flag = [False] * n
        self.dfs_num = [0] * n
        self.roots = BoundedStack(n)
        self.open_stack = BoundedStack(n)
        self.comp_num = np.full(n, -1, dtype=np.int32)
        self.scc_count = 0
        self.dfs_count = 0

    def tree_edge(self, v: int) -> None:
        self.visited[v] = True
        self.dfs_num[v] = self.dfs_count
        self.dfs_count += 1
        self.open_flag[v] = True
        self.roots.push(v)
        self.open_stack.push(v)

    def non_tree_edge(self, u: int, w: int) -> None:
        if not self.open_flag[w]:
            return
        d = self.dfs_num[w]
        while self.dfs_num[self.roots.top()] > d:
            self.roots.pop()

    def finish_node(self, v: int) -> None:
        if self.roots.top() != v:
            return
        self.roots.pop()
        while True:
            w = self.open_stack.pop()
            self.comp_num[w] = self.scc_count
            self.open_flag[w] = False
            if w == v:
                break
        self.scc_count += 1

    def is_unvisited(self, v: int) -> bool:
        return not self.visited[v]


def scc_tarjan_baseline(g: StaticDigraph,
                        engine: EngineKind = EngineKind.ITERATIVE) -> SccLabeling:
    """Tarjan's algorithm as a plain hook instantiation (separate arrays)."""
    hooks = _TarjanBaselineHooks(g.n)
    dfs_all(g, hooks, engine)
    return SccLabeling(hooks.comp_num, hooks.scc_count)


def scc_cmg_baseline(g: StaticDigraph,
                     engine: EngineKind = EngineKind.ITERATIVE) -> SccLabeling:
    """Cheriyan-Mehlhorn-Gabow as a plain hook instantiation."""
    hooks = _CmgBaselineHooks(g.n)
    dfs_all(g, hooks, engine)
    return SccLabeling(hooks.comp_num, hooks.scc_count)


# ---------------------------------------------------------------------------
# Tuned variants: overlay label array, compiled kernels
# ---------------------------------------------------------------------------


def _run_deep(kernel_call, n: int):
    return call_with_stack_headroom(kernel_call, n + 64, COMPILED_FRAME_BYTES)


def scc_cmg_tuned(g: StaticDigraph,
                  engine: EngineKind = EngineKind.ITERATIVE) -> SccLabeling:
    """CMG over one overlay array; roots stack holds encoded DFS numbers.

    The iterative engine (default) needs no call-stack headroom; the two
    recursive engines transparently provision a big-stack thread when the
    graph is deep enough to demand one.
    """
    vo, tg = g.vertex_offset, g.target
    if engine is EngineKind.ITERATIVE:
        comp, cnt = _k.cmg_overlay_es_iterative(g.n, g.m, vo, tg)
    elif engine is EngineKind.RECURSIVE_EDGE_STACK:
        comp, cnt = _run_deep(
            lambda: _k.cmg_overlay_es_recursive(g.n, g.m, vo, tg), g.n)
    elif engine is EngineKind.RECURSIVE:
        comp, cnt = _run_deep(
            lambda: _k.cmg_overlay_recursive(g.n, vo, tg), g.n)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return SccLabeling(comp, int(cnt))


def scc_tarjan_tuned(g: StaticDigraph,
                     engine: EngineKind = EngineKind.ITERATIVE) -> SccLabeling:
    """Tarjan over one overlay array; the lowpoint is a returned local."""
    vo, tg = g.vertex_offset, g.target
    if engine is EngineKind.ITERATIVE:
        comp, cnt = _k.tarjan_overlay_es_iterative(g.n, g.m, vo, tg)
    elif engine is EngineKind.RECURSIVE_EDGE_STACK:
        comp, cnt = _run_deep(
            lambda: _k.tarjan_overlay_es_recursive(g.n, g.m, vo, tg), g.n)
    elif engine is EngineKind.RECURSIVE:
        comp, cnt = _run_deep(
            lambda: _k.tarjan_overlay_recursive(g.n, vo, tg), g.n)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return SccLabeling(comp, int(cnt))


def scc_cmg_baseline_compiled(g: StaticDigraph) -> SccLabeling:
    """The separate-array CMG baseline as a compiled kernel.

    Same structure as scc_cmg_baseline (tests pin the outputs equal); exists
    so the baseline leg of the ablation benchmark is timed in the same
    execution regime as the tuned legs rather than measuring the interpreter.
    """
    comp, cnt = _run_deep(
        lambda: _k.cmg_baseline_recursive(g.n, g.vertex_offset, g.target), g.n)
    return SccLabeling(comp, int(cnt))


def scc_tarjan_baseline_compiled(g: StaticDigraph) -> SccLabeling:
    """Compiled twin of scc_tarjan_baseline; see scc_cmg_baseline_compiled."""
    comp, cnt = _run_deep(
        lambda: _k.tarjan_baseline_recursive(g.n, g.vertex_offset, g.target),
        g.n)
    return SccLabeling(comp, int(cnt))


# ---------------------------------------------------------------------------
# Kosaraju-Sharir and the scan baseline
# ---------------------------------------------------------------------------


def kosaraju_sharir_passes(g: StaticDigraph, g_rev: StaticDigraph) -> SccLabeling:
    """Both KS passes, with the reverse graph supplied by the caller.

    Pass 1 records the DFS finishing order of g; pass 2 scans that order
    backwards and runs one DFS on g_rev per unvisited node, labelling the
    component.  Split from scc_kosaraju_sharir so benchmarks can report the
    reversal cost separately.
    """
    order = _k.ks_finish_order(g.n, g.m, g.vertex_offset, g.target)
    comp, cnt = _k.ks_label_pass(g.n, g.m, g_rev.vertex_offset, g_rev.target,
                                 order)
    return SccLabeling(comp, int(cnt))


def scc_kosaraju_sharir(g: StaticDigraph) -> SccLabeling:
    """Kosaraju-Sharir: finish-order pass, edge reversal, labelling pass."""
    return kosaraju_sharir_passes(g, reverse(g))


def dfs_scan(g: StaticDigraph) -> int:
    """Visit every node with the tuned traversal machinery and count them.

    Does no component work at all; benchmarks use it as the lower bound any
    DFS-based algorithm on this representation must pay.
    """
    return int(_k.dfs_scan_iterative(g.n, g.m, g.vertex_offset, g.target))


def partitions_equal(a: SccLabeling, b: SccLabeling) -> bool:
    """True iff the two labelings induce the same partition of the nodes.

    Labels are canonicalized by first occurrence in node order, then
    compared; raises ValueError when the lengths disagree.
    """
    x = np.asarray(a.comp_num)
    y = np.asarray(b.comp_num)
    if x.shape[0] != y.shape[0]:
        raise ValueError(
            f"labelings disagree on n: {x.shape[0]} vs {y.shape[0]}")
    return bool(np.array_equal(_canonical(x), _canonical(y)))


def _canonical(lab: np.ndarray) -> np.ndarray:
    if lab.shape[0] == 0:
        return lab.astype(np.int64)
    vals, first = np.unique(lab, return_index=True)
    rank = np.empty(vals.shape[0], dtype=np.int64)
    rank[np.argsort(first)] = np.arange(vals.shape[0])
    return rank[np.searchsorted(vals, lab)]
