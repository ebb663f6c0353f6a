"""Biconnected components of undirected graphs (Hopcroft-Tarjan).

The output is a labeling of *edges*: two edges get the same component id iff
they are equal or lie on a common simple cycle.  Vertices can sit in several
components, which is why the per-vertex form is derived (articulation_points)
rather than primary.

Both variants walk the twin-arc CSR form.  Per arc (v, w) with edge id e:

* w unvisited — push e on the edge-id stack, descend; when the descent
  returns with lowpoint(w) >= dfsnum(v), pop ids down through e as one
  component, else fold the lowpoint.
* w == v — a self-loop: its own single-edge component, assigned at the first
  of its two arcs and skipped at the second.
* e is the edge that entered v and that twin arc was not skipped yet — skip
  it (once; a parallel edge with a different id still counts as a cycle).
* w a visited ancestor — back edge: push e, fold dfsnum(w).
* w a visited descendant — the edge was already handled from the other side.

bcc_baseline keeps DFS numbers and lowpoints in separate arrays and runs as
hooks over the generic DFS driver.  bcc_tuned runs compiled kernels with the
single overlay label array (-1 unvisited, negated DFS numbers counted down
from -2) and the lowpoint returned from each descent; the edge-stack engine
copies (target, edge id) arc pairs to a shared stack with watermarks.
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
from .graph import StaticUndirectedGraph


@dataclass(frozen=True, eq=False)
class BccLabeling:
    """Component id per undirected edge, ids contiguous from 0."""

    edge_comp: np.ndarray  # int32, length m
    bcc_count: int


class _BccBaselineHooks(DfsHooks):
    """Hopcroft-Tarjan as hooks, with cursor-based arc attribution.

    The driver reports node pairs only, so the hooks replay each node's
    adjacency through a cursor: every tree descent from v and every
    non_tree_edge at v consumes v's next arc, in adjacency order — exactly
    the order the driver scans, whichever engine runs it.  That recovers the
    edge id behind each event.
    """

    def __init__(self, g: StaticUndirectedGraph):
        n, m = g.n, g.m
        self.arc_target = g.arc_target.tolist()
        self.arc_edge_id = g.arc_edge_id.tolist()
        self.cursor = g.vertex_offset[:-1].tolist()  # next unconsumed arc per node
        self.dfs_num = [-1] * n
        self.low = [0] * n
        self.parent_edge = [-1] * n
        self.twin_unused = [False] * n
        self.path = BoundedStack(n)
        self.estack = BoundedStack(m)
        self.edge_comp = np.full(m, -1, dtype=np.int32)
        self.bcc_count = 0
        self.dfs_count = 0

    def _consume(self, u: int) -> int:
        i = self.cursor[u]
        self.cursor[u] = i + 1
        return self.arc_edge_id[i]

    def tree_edge(self, v: int) -> None:
        if self.path.size() > 0:
            e = self._consume(self.path.top())
            self.parent_edge[v] = e
            self.twin_unused[v] = True
            self.estack.push(e)
        self.dfs_num[v] = self.dfs_count
        self.dfs_count += 1
        self.low[v] = self.dfs_num[v]
        self.path.push(v)

    def non_tree_edge(self, u: int, w: int) -> None:
        e = self._consume(u)
        if w == u:
            if self.edge_comp[e] == -1:
                self.edge_comp[e] = self.bcc_count
                self.bcc_count += 1
        elif self.twin_unused[u] and e == self.parent_edge[u]:
            self.twin_unused[u] = False
        elif self.dfs_num[w] < self.dfs_num[u]:
            self.estack.push(e)
            if self.dfs_num[w] < self.low[u]:
                self.low[u] = self.dfs_num[w]
        # else: w is a descendant, edge already handled from the other side

    def finish_tree_edge(self, v: int, w: int) -> None:
        if self.low[w] >= self.dfs_num[v]:
            cid = self.bcc_count
            self.bcc_count += 1
            entering = self.parent_edge[w]
            while True:
                e = self.estack.pop()
                self.edge_comp[e] = cid
                if e == entering:
                    break
        elif self.low[w] < self.low[v]:
            self.low[v] = self.low[w]

    def finish_node(self, v: int) -> None:
        self.path.pop()

    def is_unvisited(self, v: int) -> bool:
        return self.dfs_num[v] == -1


def bcc_baseline(g: StaticUndirectedGraph,
                 engine: EngineKind = EngineKind.ITERATIVE) -> BccLabeling:
    """Classic scheme over the generic DFS driver; separate plain arrays."""
    hooks = _BccBaselineHooks(g)
    dfs_all(g, hooks, engine, edge_stack=BoundedStack(2 * g.m))
    return BccLabeling(hooks.edge_comp, hooks.bcc_count)


def bcc_tuned(g: StaticUndirectedGraph,
              engine: EngineKind = EngineKind.ITERATIVE) -> BccLabeling:
    """Overlay + returned-lowpoint kernels; output equals bcc_baseline."""
    n, m = g.n, g.m
    vo, at, ae = g.vertex_offset, g.arc_target, g.arc_edge_id
    if engine is EngineKind.ITERATIVE:
        comp, cnt = _k.bcc_overlay_es_iterative(n, m, vo, at, ae)
    elif engine is EngineKind.RECURSIVE_EDGE_STACK:
        comp, cnt = call_with_stack_headroom(
            lambda: _k.bcc_overlay_es_recursive(n, m, vo, at, ae),
            n + 64, COMPILED_FRAME_BYTES)
    elif engine is EngineKind.RECURSIVE:
        comp, cnt = call_with_stack_headroom(
            lambda: _k.bcc_overlay_recursive(n, m, vo, at, ae),
            n + 64, COMPILED_FRAME_BYTES)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return BccLabeling(comp, int(cnt))


def bcc_baseline_compiled(g: StaticUndirectedGraph) -> BccLabeling:
    """Compiled twin of bcc_baseline for the ablation benchmark.

    Identical separate-array structure (tests pin the outputs equal); keeps
    the baseline leg of the ablation out of the interpreter.
    """
    comp, cnt = call_with_stack_headroom(
        lambda: _k.bcc_baseline_recursive(g.n, g.m, g.vertex_offset,
                                          g.arc_target, g.arc_edge_id),
        g.n + 64, COMPILED_FRAME_BYTES)
    return BccLabeling(comp, int(cnt))


def articulation_points(g: StaticUndirectedGraph,
                        lab: BccLabeling) -> set:
    """Nodes whose incident edges span at least two component ids."""
    out = set()
    vo = g.vertex_offset
    comp = lab.edge_comp
    for v in range(g.n):
        lo, hi = int(vo[v]), int(vo[v + 1])
        if hi - lo < 2:
            continue
        ids = comp[g.arc_edge_id[lo:hi]]
        if np.unique(ids).shape[0] >= 2:
            out.add(v)
    return out
