"""Compiled kernels shared by the graph builders and the tuned algorithms.

Everything in here is nopython-mode numba operating on plain int32 arrays.
The Python-facing modules (graph, scc, bcc) own validation and the public
types; kernels assume their inputs already satisfy the CSR invariants.

A hard-won constraint: self-recursive kernels must be compiled with
``cache=False``.  Reloading a recursive function from numba's on-disk cache
leaves the self-call pointing at a stale address and crashes the process.
Iterative kernels are safe to cache.
"""

import numpy as np
from numba import int32, int64, njit

# ---------------------------------------------------------------------------
# CSR construction (counting sort by key, stable)
# ---------------------------------------------------------------------------


@njit(cache=True)
def csr_from_pairs(n, src, dst):
    """Group dst by src into CSR arrays (vertex_offset, target).

    Stable: within one source bucket, targets keep their input order.
    """
    m = src.shape[0]
    vo = np.zeros(n + 1, dtype=np.int32)
    for i in range(m):
        vo[src[i] + 1] += 1
    for v in range(n):
        vo[v + 1] += vo[v]
    tg = np.empty(m, dtype=np.int32)
    pos = vo[:n].copy()
    for i in range(m):
        s = src[i]
        tg[pos[s]] = dst[i]
        pos[s] += 1
    return vo, tg


@njit(cache=True)
def csr_reverse(n, vo, tg):
    """Reverse a CSR digraph: counting sort of (target, source) by target."""
    m = tg.shape[0]
    rvo = np.zeros(n + 1, dtype=np.int32)
    for i in range(m):
        rvo[tg[i] + 1] += 1
    for v in range(n):
        rvo[v + 1] += rvo[v]
    rtg = np.empty(m, dtype=np.int32)
    pos = rvo[:n].copy()
    for v in range(n):
        for i in range(vo[v], vo[v + 1]):
            w = tg[i]
            rtg[pos[w]] = v
            pos[w] += 1
    return rvo, rtg


@njit(cache=True)
def csr_undirected(n, src, dst):
    """Build the twin-arc CSR of an undirected edge list.

    Edge i contributes arc src[i]->dst[i] and arc dst[i]->src[i], both
    carrying edge id i.  Buckets are stable in arc-creation order, so the
    two arcs of edge i precede those of edge i+1 within any shared bucket.
    """
    m = src.shape[0]
    vo = np.zeros(n + 1, dtype=np.int32)
    for i in range(m):
        vo[src[i] + 1] += 1
        vo[dst[i] + 1] += 1
    for v in range(n):
        vo[v + 1] += vo[v]
    arc_target = np.empty(2 * m, dtype=np.int32)
    arc_edge_id = np.empty(2 * m, dtype=np.int32)
    pos = vo[:n].copy()
    for i in range(m):
        u = src[i]
        v = dst[i]
        arc_target[pos[u]] = v
        arc_edge_id[pos[u]] = i
        pos[u] += 1
        arc_target[pos[v]] = u
        arc_edge_id[pos[v]] = i
        pos[v] += 1
    return vo, arc_target, arc_edge_id


# ---------------------------------------------------------------------------
# SCC: Cheriyan-Mehlhorn-Gabow family
# ---------------------------------------------------------------------------
# Baseline kernels keep the textbook bookkeeping (visited marks, DFS numbers,
# node-valued stacks in separate arrays, adjacency scanned in place) so the
# benchmark ablation measures the data-layout techniques one at a time inside
# a single execution technology.  Counter packing: small int64 arrays carry
# the mutable counters through the recursion ([dfs counter, component count,
# roots size, open size, edge-stack size] as applicable).


@njit(cache=False)
def _cmg_base_dfs(v, vo, tg, visited, dfs_num, open_flag, comp, roots, opens, ctr):
    visited[v] = 1
    dfs_num[v] = ctr[0]
    ctr[0] += 1
    open_flag[v] = 1
    roots[ctr[2]] = v
    ctr[2] += 1
    opens[ctr[3]] = v
    ctr[3] += 1
    for i in range(vo[v], vo[v + 1]):
        w = tg[i]
        if visited[w] == 0:
            _cmg_base_dfs(w, vo, tg, visited, dfs_num, open_flag, comp, roots,
                          opens, ctr)
        elif open_flag[w] == 1:
            d = dfs_num[w]
            while d < dfs_num[roots[ctr[2] - 1]]:
                ctr[2] -= 1
    if roots[ctr[2] - 1] == v:
        ctr[2] -= 1
        while True:
            ctr[3] -= 1
            u = opens[ctr[3]]
            comp[u] = ctr[1]
            open_flag[u] = 0
            if u == v:
                break
        ctr[1] += 1


@njit(cache=False)
def cmg_baseline_recursive(n, vo, tg):
    visited = np.zeros(n, dtype=np.uint8)
    open_flag = np.zeros(n, dtype=np.uint8)
    dfs_num = np.empty(n, dtype=np.int32)
    comp = np.empty(n, dtype=np.int32)
    roots = np.empty(n, dtype=np.int32)
    opens = np.empty(n, dtype=np.int32)
    ctr = np.zeros(4, dtype=np.int64)
    for v in range(n):
        if visited[v] == 0:
            _cmg_base_dfs(v, vo, tg, visited, dfs_num, open_flag, comp, roots,
                          opens, ctr)
    return comp, ctr[1]


@njit(cache=False)
def _cmg_overlay_dfs(v, vo, tg, label, roots, opens, ctr):
    ctr[0] -= 1
    dfs_num = ctr[0]
    label[v] = dfs_num
    roots[ctr[2]] = dfs_num
    ctr[2] += 1
    opens[ctr[3]] = v
    ctr[3] += 1
    for i in range(vo[v], vo[v + 1]):
        w = tg[i]
        d = label[w]
        if d >= 0:
            continue
        if d == -1:
            _cmg_overlay_dfs(w, vo, tg, label, roots, opens, ctr)
        else:
            while roots[ctr[2] - 1] < d:
                ctr[2] -= 1
    if roots[ctr[2] - 1] == dfs_num:
        while True:
            ctr[3] -= 1
            u = opens[ctr[3]]
            label[u] = ctr[1]
            if u == v:
                break
        ctr[2] -= 1
        ctr[1] += 1


@njit(cache=False)
def cmg_overlay_recursive(n, vo, tg):
    label = np.full(n, -1, dtype=np.int32)
    roots = np.empty(n, dtype=np.int32)
    opens = np.empty(n, dtype=np.int32)
    ctr = np.zeros(4, dtype=np.int64)
    ctr[0] = -1
    for v in range(n):
        if label[v] == -1:
            _cmg_overlay_dfs(v, vo, tg, label, roots, opens, ctr)
    return label, ctr[1]


@njit(cache=False)
def _cmg_overlay_es_dfs(v, vo, tg, label, es, roots, opens, ctr):
    ctr[0] -= 1
    dfs_num = ctr[0]
    label[v] = dfs_num
    roots[ctr[2]] = dfs_num
    ctr[2] += 1
    opens[ctr[3]] = v
    ctr[3] += 1
    sz = ctr[4]
    for i in range(vo[v + 1] - 1, vo[v] - 1, -1):
        es[ctr[4]] = tg[i]
        ctr[4] += 1
    while ctr[4] > sz:
        ctr[4] -= 1
        w = es[ctr[4]]
        d = label[w]
        if d >= 0:
            continue
        if d == -1:
            _cmg_overlay_es_dfs(w, vo, tg, label, es, roots, opens, ctr)
        else:
            while roots[ctr[2] - 1] < d:
                ctr[2] -= 1
    if roots[ctr[2] - 1] == dfs_num:
        while True:
            ctr[3] -= 1
            u = opens[ctr[3]]
            label[u] = ctr[1]
            if u == v:
                break
        ctr[2] -= 1
        ctr[1] += 1


@njit(cache=False)
def cmg_overlay_es_recursive(n, m, vo, tg):
    label = np.full(n, -1, dtype=np.int32)
    es = np.empty(m, dtype=np.int32)
    roots = np.empty(n, dtype=np.int32)
    opens = np.empty(n, dtype=np.int32)
    ctr = np.zeros(5, dtype=np.int64)
    ctr[0] = -1
    for v in range(n):
        if label[v] == -1:
            _cmg_overlay_es_dfs(v, vo, tg, label, es, roots, opens, ctr)
    return label, ctr[1]


@njit(cache=True)
def cmg_overlay_es_iterative(n, m, vo, tg):
    label = np.full(n, -1, dtype=np.int32)
    es = np.empty(m, dtype=np.int32)
    roots = np.empty(n, dtype=np.int32)
    opens = np.empty(n, dtype=np.int32)
    fr_node = np.empty(n, dtype=np.int32)
    fr_dfs = np.empty(n, dtype=np.int32)
    fr_mark = np.empty(n, dtype=np.int64)
    dfs_count = -1
    scc_count = 0
    rsz = 0
    osz = 0
    esz = 0
    for r in range(n):
        if label[r] != -1:
            continue
        dfs_count -= 1
        label[r] = dfs_count
        roots[rsz] = dfs_count
        rsz += 1
        opens[osz] = r
        osz += 1
        depth = 0
        fr_node[0] = r
        fr_dfs[0] = dfs_count
        fr_mark[0] = esz
        for i in range(vo[r + 1] - 1, vo[r] - 1, -1):
            es[esz] = tg[i]
            esz += 1
        while depth >= 0:
            mark = fr_mark[depth]
            descended = False
            while esz > mark:
                esz -= 1
                w = es[esz]
                d = label[w]
                if d >= 0:
                    continue
                if d == -1:
                    dfs_count -= 1
                    label[w] = dfs_count
                    roots[rsz] = dfs_count
                    rsz += 1
                    opens[osz] = w
                    osz += 1
                    depth += 1
                    fr_node[depth] = w
                    fr_dfs[depth] = dfs_count
                    fr_mark[depth] = esz
                    for i in range(vo[w + 1] - 1, vo[w] - 1, -1):
                        es[esz] = tg[i]
                        esz += 1
                    descended = True
                    break
                else:
                    while roots[rsz - 1] < d:
                        rsz -= 1
            if descended:
                continue
            v = fr_node[depth]
            dv = fr_dfs[depth]
            if roots[rsz - 1] == dv:
                while True:
                    osz -= 1
                    u = opens[osz]
                    label[u] = scc_count
                    if u == v:
                        break
                rsz -= 1
                scc_count += 1
            depth -= 1
    return label, scc_count


# ---------------------------------------------------------------------------
# SCC: Tarjan family
# ---------------------------------------------------------------------------


@njit(cache=False)
def _tarjan_base_dfs(v, vo, tg, visited, dfs_num, low_node, open_flag, opens,
                     comp, ctr):
    visited[v] = 1
    dfs_num[v] = ctr[0]
    ctr[0] += 1
    low_node[v] = v
    open_flag[v] = 1
    opens[ctr[2]] = v
    ctr[2] += 1
    for i in range(vo[v], vo[v + 1]):
        w = tg[i]
        if visited[w] == 0:
            _tarjan_base_dfs(w, vo, tg, visited, dfs_num, low_node, open_flag,
                             opens, comp, ctr)
            if dfs_num[low_node[w]] < dfs_num[low_node[v]]:
                low_node[v] = low_node[w]
        elif open_flag[w] == 1 and dfs_num[w] < dfs_num[low_node[v]]:
            low_node[v] = w
    if low_node[v] == v:
        while True:
            ctr[2] -= 1
            u = opens[ctr[2]]
            comp[u] = ctr[1]
            open_flag[u] = 0
            if u == v:
                break
        ctr[1] += 1


@njit(cache=False)
def tarjan_baseline_recursive(n, vo, tg):
    visited = np.zeros(n, dtype=np.uint8)
    open_flag = np.zeros(n, dtype=np.uint8)
    dfs_num = np.empty(n, dtype=np.int32)
    low_node = np.empty(n, dtype=np.int32)
    comp = np.empty(n, dtype=np.int32)
    opens = np.empty(n, dtype=np.int32)
    ctr = np.zeros(3, dtype=np.int64)
    for v in range(n):
        if visited[v] == 0:
            _tarjan_base_dfs(v, vo, tg, visited, dfs_num, low_node, open_flag,
                             opens, comp, ctr)
    return comp, ctr[1]


@njit(cache=False)
def _tarjan_overlay_dfs(v, vo, tg, label, opens, ctr):
    dfs_num = ctr[0]
    ctr[0] += 1
    label[v] = dfs_num
    low = dfs_num
    opens[ctr[2]] = v
    ctr[2] += 1
    for i in range(vo[v], vo[v + 1]):
        w = tg[i]
        d = label[w]
        if d == -1:
            d = _tarjan_overlay_dfs(w, vo, tg, label, opens, ctr)
        if d < low:
            low = d
    if dfs_num == low:
        while True:
            ctr[2] -= 1
            u = opens[ctr[2]]
            label[u] = ctr[1]
            if u == v:
                break
        ctr[1] += 1
    return low


@njit(cache=False)
def tarjan_overlay_recursive(n, vo, tg):
    label = np.full(n, -1, dtype=np.int32)
    opens = np.empty(n, dtype=np.int32)
    ctr = np.zeros(3, dtype=np.int64)
    ctr[0] = -(n + 1)
    for v in range(n):
        if label[v] == -1:
            _tarjan_overlay_dfs(v, vo, tg, label, opens, ctr)
    return label, ctr[1]


@njit(cache=False)
def _tarjan_overlay_es_dfs(v, vo, tg, label, es, opens, ctr):
    dfs_num = ctr[0]
    ctr[0] += 1
    label[v] = dfs_num
    low = dfs_num
    opens[ctr[2]] = v
    ctr[2] += 1
    sz = ctr[3]
    for i in range(vo[v + 1] - 1, vo[v] - 1, -1):
        es[ctr[3]] = tg[i]
        ctr[3] += 1
    while ctr[3] > sz:
        ctr[3] -= 1
        w = es[ctr[3]]
        d = label[w]
        if d == -1:
            d = _tarjan_overlay_es_dfs(w, vo, tg, label, es, opens, ctr)
        if d < low:
            low = d
    if dfs_num == low:
        while True:
            ctr[2] -= 1
            u = opens[ctr[2]]
            label[u] = ctr[1]
            if u == v:
                break
        ctr[1] += 1
    return low


@njit(cache=False)
def tarjan_overlay_es_recursive(n, m, vo, tg):
    label = np.full(n, -1, dtype=np.int32)
    es = np.empty(m, dtype=np.int32)
    opens = np.empty(n, dtype=np.int32)
    ctr = np.zeros(4, dtype=np.int64)
    ctr[0] = -(n + 1)
    for v in range(n):
        if label[v] == -1:
            _tarjan_overlay_es_dfs(v, vo, tg, label, es, opens, ctr)
    return label, ctr[1]


@njit(cache=True)
def tarjan_overlay_es_iterative(n, m, vo, tg):
    label = np.full(n, -1, dtype=np.int32)
    es = np.empty(m, dtype=np.int32)
    opens = np.empty(n, dtype=np.int32)
    fr_node = np.empty(n, dtype=np.int32)
    fr_dfs = np.empty(n, dtype=np.int32)
    fr_low = np.empty(n, dtype=np.int32)
    fr_mark = np.empty(n, dtype=np.int64)
    dfs_count = -(n + 1)
    scc_count = 0
    osz = 0
    esz = 0
    for r in range(n):
        if label[r] != -1:
            continue
        label[r] = dfs_count
        opens[osz] = r
        osz += 1
        depth = 0
        fr_node[0] = r
        fr_dfs[0] = dfs_count
        fr_low[0] = dfs_count
        fr_mark[0] = esz
        dfs_count += 1
        for i in range(vo[r + 1] - 1, vo[r] - 1, -1):
            es[esz] = tg[i]
            esz += 1
        while depth >= 0:
            mark = fr_mark[depth]
            low = fr_low[depth]
            descended = False
            while esz > mark:
                esz -= 1
                w = es[esz]
                d = label[w]
                if d == -1:
                    label[w] = dfs_count
                    opens[osz] = w
                    osz += 1
                    fr_low[depth] = low
                    depth += 1
                    fr_node[depth] = w
                    fr_dfs[depth] = dfs_count
                    fr_low[depth] = dfs_count
                    fr_mark[depth] = esz
                    dfs_count += 1
                    for i in range(vo[w + 1] - 1, vo[w] - 1, -1):
                        es[esz] = tg[i]
                        esz += 1
                    descended = True
                    break
                if d < low:
                    low = d
            if descended:
                continue
            v = fr_node[depth]
            if fr_dfs[depth] == low:
                while True:
                    osz -= 1
                    u = opens[osz]
                    label[u] = scc_count
                    if u == v:
                        break
                scc_count += 1
            depth -= 1
            if depth >= 0 and low < fr_low[depth]:
                fr_low[depth] = low
    return label, scc_count


# ---------------------------------------------------------------------------
# SCC: Kosaraju-Sharir (two iterative passes; reversal is the caller's step)
# ---------------------------------------------------------------------------


@njit(cache=True)
def ks_finish_order(n, m, vo, tg):
    """First pass: DFS finishing order (overlay visited mark + edge stack)."""
    label = np.full(n, -1, dtype=np.int32)
    es = np.empty(m, dtype=np.int32)
    fr_node = np.empty(n, dtype=np.int32)
    fr_mark = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int32)
    osz = 0
    esz = 0
    for r in range(n):
        if label[r] != -1:
            continue
        label[r] = -2
        depth = 0
        fr_node[0] = r
        fr_mark[0] = esz
        for i in range(vo[r + 1] - 1, vo[r] - 1, -1):
            es[esz] = tg[i]
            esz += 1
        while depth >= 0:
            mark = fr_mark[depth]
            descended = False
            while esz > mark:
                esz -= 1
                w = es[esz]
                if label[w] == -1:
                    label[w] = -2
                    depth += 1
                    fr_node[depth] = w
                    fr_mark[depth] = esz
                    for i in range(vo[w + 1] - 1, vo[w] - 1, -1):
                        es[esz] = tg[i]
                        esz += 1
                    descended = True
                    break
            if descended:
                continue
            order[osz] = fr_node[depth]
            osz += 1
            depth -= 1
    return order


@njit(cache=True)
def ks_label_pass(n, m, rvo, rtg, order):
    """Second pass over the reverse graph in decreasing finishing time."""
    comp = np.full(n, -1, dtype=np.int32)
    es = np.empty(m, dtype=np.int32)
    fr_mark = np.empty(n, dtype=np.int64)
    scc_count = 0
    esz = 0
    for idx in range(n - 1, -1, -1):
        r = order[idx]
        if comp[r] != -1:
            continue
        comp[r] = scc_count
        depth = 0
        fr_mark[0] = esz
        for i in range(rvo[r + 1] - 1, rvo[r] - 1, -1):
            es[esz] = rtg[i]
            esz += 1
        while depth >= 0:
            mark = fr_mark[depth]
            descended = False
            while esz > mark:
                esz -= 1
                w = es[esz]
                if comp[w] == -1:
                    comp[w] = scc_count
                    depth += 1
                    fr_mark[depth] = esz
                    for i in range(rvo[w + 1] - 1, rvo[w] - 1, -1):
                        es[esz] = rtg[i]
                        esz += 1
                    descended = True
                    break
            if descended:
                continue
            depth -= 1
        scc_count += 1
    return comp, scc_count


@njit(cache=True)
def dfs_scan_iterative(n, m, vo, tg):
    """Visit every node via the tuned machinery, doing no other work."""
    label = np.full(n, -1, dtype=np.int32)
    es = np.empty(m, dtype=np.int32)
    fr_mark = np.empty(n, dtype=np.int64)
    visited = 0
    esz = 0
    for r in range(n):
        if label[r] != -1:
            continue
        label[r] = -2
        visited += 1
        depth = 0
        fr_mark[0] = esz
        for i in range(vo[r + 1] - 1, vo[r] - 1, -1):
            es[esz] = tg[i]
            esz += 1
        while depth >= 0:
            mark = fr_mark[depth]
            descended = False
            while esz > mark:
                esz -= 1
                w = es[esz]
                if label[w] == -1:
                    label[w] = -2
                    visited += 1
                    depth += 1
                    fr_mark[depth] = esz
                    for i in range(vo[w + 1] - 1, vo[w] - 1, -1):
                        es[esz] = tg[i]
                        esz += 1
                    descended = True
                    break
            if descended:
                continue
            depth -= 1
    return visited


# ---------------------------------------------------------------------------
# BCC: Hopcroft-Tarjan over twin-arc CSR
# ---------------------------------------------------------------------------
# Arc handling shared by all variants: a tree arc pushes its edge id and
# descends; the twin of the arc used to enter the current node is skipped
# exactly once (by edge id, so parallel edges still count as cycles); a
# self-loop closes immediately as its own single-edge component; an arc to a
# visited descendant is the second sighting of an edge already handled from
# the other side and is ignored.  Components close at tree-edge finish when
# the child's lowpoint does not climb above the parent.
#
# Baseline: DFS numbers count up from 0 in their own array, lowpoints live in
# an array.  Tuned: one overlay label array (-1 unvisited, negated DFS
# numbers assigned downward from -2 while on the tree, so "visited earlier"
# means "label greater"), lowpoint as a local returned from the descent.


@njit(cache=False)
def _bcc_base_dfs(v, parent_edge, vo, at, ae, dfs_num, low, estack, comp, ctr):
    dfs_num[v] = ctr[0]
    ctr[0] += 1
    low[v] = dfs_num[v]
    twin_unused = True
    for i in range(vo[v], vo[v + 1]):
        w = at[i]
        e = ae[i]
        if dfs_num[w] == -1:
            estack[ctr[2]] = e
            ctr[2] += 1
            _bcc_base_dfs(w, e, vo, at, ae, dfs_num, low, estack, comp, ctr)
            if low[w] >= dfs_num[v]:
                cid = ctr[1]
                ctr[1] += 1
                while True:
                    ctr[2] -= 1
                    e2 = estack[ctr[2]]
                    comp[e2] = cid
                    if e2 == e:
                        break
            elif low[w] < low[v]:
                low[v] = low[w]
        elif w == v:
            if comp[e] == -1:
                comp[e] = ctr[1]
                ctr[1] += 1
        elif twin_unused and e == parent_edge:
            twin_unused = False
        elif dfs_num[w] < dfs_num[v]:
            estack[ctr[2]] = e
            ctr[2] += 1
            if dfs_num[w] < low[v]:
                low[v] = dfs_num[w]
    return 0


@njit(cache=False)
def bcc_baseline_recursive(n, m, vo, at, ae):
    dfs_num = np.full(n, -1, dtype=np.int32)
    low = np.empty(n, dtype=np.int32)
    estack = np.empty(m, dtype=np.int32)
    comp = np.full(m, -1, dtype=np.int32)
    ctr = np.zeros(3, dtype=np.int64)
    for v in range(n):
        if dfs_num[v] == -1:
            _bcc_base_dfs(v, -1, vo, at, ae, dfs_num, low, estack, comp, ctr)
    return comp, ctr[1]


@njit(cache=False)
def _bcc_overlay_dfs(v, parent_edge, vo, at, ae, label, estack, comp, ctr):
    ctr[0] -= 1
    dv = ctr[0]
    label[v] = dv
    low = dv
    twin_unused = True
    for i in range(vo[v], vo[v + 1]):
        w = at[i]
        e = ae[i]
        d = label[w]
        if d == -1:
            estack[ctr[2]] = e
            ctr[2] += 1
            cl = _bcc_overlay_dfs(w, e, vo, at, ae, label, estack, comp, ctr)
            if cl <= dv:
                cid = ctr[1]
                ctr[1] += 1
                while True:
                    ctr[2] -= 1
                    e2 = estack[ctr[2]]
                    comp[e2] = cid
                    if e2 == e:
                        break
            elif cl > low:
                low = cl
        elif w == v:
            if comp[e] == -1:
                comp[e] = ctr[1]
                ctr[1] += 1
        elif twin_unused and e == parent_edge:
            twin_unused = False
        elif d > dv:
            estack[ctr[2]] = e
            ctr[2] += 1
            if d > low:
                low = d
    return low


@njit(cache=False)
def bcc_overlay_recursive(n, m, vo, at, ae):
    label = np.full(n, -1, dtype=np.int32)
    estack = np.empty(m, dtype=np.int32)
    comp = np.full(m, -1, dtype=np.int32)
    ctr = np.zeros(3, dtype=np.int64)
    ctr[0] = -1
    for v in range(n):
        if label[v] == -1:
            _bcc_overlay_dfs(v, -1, vo, at, ae, label, estack, comp, ctr)
    return comp, ctr[1]


@njit(cache=False)
def _bcc_overlay_es_dfs(v, parent_edge, vo, at, ae, label, a_tgt, a_eid,
                        estack, comp, ctr):
    ctr[0] -= 1
    dv = ctr[0]
    label[v] = dv
    low = dv
    twin_unused = True
    sz = ctr[3]
    for i in range(vo[v + 1] - 1, vo[v] - 1, -1):
        a_tgt[ctr[3]] = at[i]
        a_eid[ctr[3]] = ae[i]
        ctr[3] += 1
    while ctr[3] > sz:
        ctr[3] -= 1
        w = a_tgt[ctr[3]]
        e = a_eid[ctr[3]]
        d = label[w]
        if d == -1:
            estack[ctr[2]] = e
            ctr[2] += 1
            cl = _bcc_overlay_es_dfs(w, e, vo, at, ae, label, a_tgt, a_eid,
                                     estack, comp, ctr)
            if cl <= dv:
                cid = ctr[1]
                ctr[1] += 1
                while True:
                    ctr[2] -= 1
                    e2 = estack[ctr[2]]
                    comp[e2] = cid
                    if e2 == e:
                        break
            elif cl > low:
                low = cl
        elif w == v:
            if comp[e] == -1:
                comp[e] = ctr[1]
                ctr[1] += 1
        elif twin_unused and e == parent_edge:
            twin_unused = False
        elif d > dv:
            estack[ctr[2]] = e
            ctr[2] += 1
            if d > low:
                low = d
    return low


@njit(cache=False)
def bcc_overlay_es_recursive(n, m, vo, at, ae):
    label = np.full(n, -1, dtype=np.int32)
    a_tgt = np.empty(2 * m, dtype=np.int32)
    a_eid = np.empty(2 * m, dtype=np.int32)
    estack = np.empty(m, dtype=np.int32)
    comp = np.full(m, -1, dtype=np.int32)
    ctr = np.zeros(4, dtype=np.int64)
    ctr[0] = -1
    for v in range(n):
        if label[v] == -1:
            _bcc_overlay_es_dfs(v, -1, vo, at, ae, label, a_tgt, a_eid,
                                estack, comp, ctr)
    return comp, ctr[1]


@njit(cache=True)
def bcc_overlay_es_iterative(n, m, vo, at, ae):
    label = np.full(n, -1, dtype=np.int32)
    a_tgt = np.empty(2 * m, dtype=np.int32)
    a_eid = np.empty(2 * m, dtype=np.int32)
    estack = np.empty(m, dtype=np.int32)
    comp = np.full(m, -1, dtype=np.int32)
    fr_node = np.empty(n, dtype=np.int32)
    fr_dfs = np.empty(n, dtype=np.int32)
    fr_low = np.empty(n, dtype=np.int32)
    fr_pedge = np.empty(n, dtype=np.int32)
    fr_twin = np.empty(n, dtype=np.uint8)
    fr_mark = np.empty(n, dtype=np.int64)
    dfs_count = -1
    bcc_count = 0
    asz = 0
    esz = 0
    for r in range(n):
        if label[r] != -1:
            continue
        dfs_count -= 1
        label[r] = dfs_count
        depth = 0
        fr_node[0] = r
        fr_dfs[0] = dfs_count
        fr_low[0] = dfs_count
        fr_pedge[0] = -1
        fr_twin[0] = 0
        fr_mark[0] = asz
        for i in range(vo[r + 1] - 1, vo[r] - 1, -1):
            a_tgt[asz] = at[i]
            a_eid[asz] = ae[i]
            asz += 1
        while depth >= 0:
            mark = fr_mark[depth]
            v = fr_node[depth]
            dv = fr_dfs[depth]
            low = fr_low[depth]
            pedge = fr_pedge[depth]
            twin_unused = fr_twin[depth]
            descended = False
            while asz > mark:
                asz -= 1
                w = a_tgt[asz]
                e = a_eid[asz]
                d = label[w]
                if d == -1:
                    estack[esz] = e
                    esz += 1
                    dfs_count -= 1
                    label[w] = dfs_count
                    fr_low[depth] = low
                    fr_twin[depth] = twin_unused
                    depth += 1
                    fr_node[depth] = w
                    fr_dfs[depth] = dfs_count
                    fr_low[depth] = dfs_count
                    fr_pedge[depth] = e
                    fr_twin[depth] = 1
                    fr_mark[depth] = asz
                    for i in range(vo[w + 1] - 1, vo[w] - 1, -1):
                        a_tgt[asz] = at[i]
                        a_eid[asz] = ae[i]
                        asz += 1
                    descended = True
                    break
                if w == v:
                    if comp[e] == -1:
                        comp[e] = bcc_count
                        bcc_count += 1
                elif twin_unused == 1 and e == pedge:
                    twin_unused = 0
                elif d > dv:
                    estack[esz] = e
                    esz += 1
                    if d > low:
                        low = d
            if descended:
                continue
            depth -= 1
            if depth >= 0:
                if low <= fr_dfs[depth]:
                    cid = bcc_count
                    bcc_count += 1
                    while True:
                        esz -= 1
                        e2 = estack[esz]
                        comp[e2] = cid
                        if e2 == pedge:
                            break
                elif low > fr_low[depth]:
                    fr_low[depth] = low
    return comp, bcc_count
