"""Brute-force ground truth for SCC and BCC on small instances.

Nothing here does a DFS — that is the point.  Reachability comes from
Floyd-Warshall-style boolean relaxation and biconnectivity from exhaustive
simple-cycle enumeration, so the oracles cannot share a bug family with the
traversal algorithms they check.  Size caps are hard errors: the closure is
O(n^3) and the enumeration exponential, and silently accepting big inputs
would hang a test run rather than fail it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .bcc import BccLabeling
from .graph import (
    EdgeList,
    StaticDigraph,
    StaticUndirectedGraph,
    random_digraph,
    random_undirected,
)
from .scc import SccLabeling

ORACLE_MAX_N = 256
BCC_ORACLE_MAX_N = 10
BCC_ORACLE_MAX_M = 20


class OracleCapError(ValueError):
    """Input exceeds an oracle's hard size cap."""


@dataclass(frozen=True, eq=False)
class ReachabilityMatrix:
    """reach[u][v] is True iff a directed path u => v exists (reach[u][u] always)."""

    n: int
    reach: np.ndarray  # bool, n x n, transitively closed


def reachability_closure(g: StaticDigraph) -> ReachabilityMatrix:
    """Transitive closure by repeated relaxation (no DFS); n <= 256 enforced."""
    if g.n > ORACLE_MAX_N:
        raise OracleCapError(
            f"reachability oracle is capped at n <= {ORACLE_MAX_N}, got n={g.n}")
    n = g.n
    reach = np.eye(n, dtype=bool)
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(g.vertex_offset))
    reach[src, g.target] = True
    for k in range(n):
        reach |= np.outer(reach[:, k], reach[k, :])
    return ReachabilityMatrix(n, reach)


def scc_oracle(g: StaticDigraph) -> SccLabeling:
    """Components from mutual reachability, numbered by first occurrence."""
    mutual = reachability_closure(g).reach
    mutual = mutual & mutual.T
    comp = np.full(g.n, -1, dtype=np.int32)
    count = 0
    for v in range(g.n):
        if comp[v] == -1:
            comp[mutual[v]] = count
            count += 1
    return SccLabeling(comp, count)


def bcc_oracle(g: StaticUndirectedGraph) -> BccLabeling:
    """Edge classes of the "lie on a common simple cycle" relation.

    Enumerates every simple cycle by exhaustive path search (each cycle is
    rooted at its minimum vertex; a self-loop counts as a one-edge cycle and
    parallel edges as a two-edge cycle) and marks all edge pairs sharing a
    cycle.  The resulting relation must already be transitive — that is a
    theorem — so a closure step would only mask enumeration bugs, and a
    violation raises instead.
    """
    if g.n > BCC_ORACLE_MAX_N or g.m > BCC_ORACLE_MAX_M:
        raise OracleCapError(
            f"cycle-enumeration oracle is capped at n <= {BCC_ORACLE_MAX_N}, "
            f"m <= {BCC_ORACLE_MAX_M}, got n={g.n}, m={g.m}")
    n, m = g.n, g.m
    arcs_of = []
    for v in range(n):
        tgt, eid = g.arcs(v)
        arcs_of.append(list(zip(tgt.tolist(), eid.tolist())))

    share = np.eye(m, dtype=bool)

    def mark(cycle_edges) -> None:
        for a in cycle_edges:
            for b in cycle_edges:
                share[a, b] = True

    path_edges: list = []
    used = [False] * m
    on_path = [False] * n

    def extend(v: int, s: int) -> None:
        for w, e in arcs_of[v]:
            if w == s:
                if not path_edges:
                    if w == v:  # self-loop at the root
                        mark((e,))
                elif not used[e]:
                    mark(path_edges + [e])
            elif not on_path[w] and w > s:
                used[e] = True
                on_path[w] = True
                path_edges.append(e)
                extend(w, s)
                path_edges.pop()
                on_path[w] = False
                used[e] = False

    for s in range(n):
        on_path[s] = True
        extend(s, s)
        on_path[s] = False

    closure = share.copy()
    for k in range(m):
        closure |= np.outer(closure[:, k], closure[k, :])
    if not np.array_equal(share, closure):
        raise AssertionError(
            "cycle-share relation came out non-transitive; enumerator bug")

    comp = np.full(m, -1, dtype=np.int32)
    count = 0
    for e in range(m):
        if comp[e] == -1:
            comp[share[e]] = count
            count += 1
    return BccLabeling(comp, count)


def trial_graphs(trials: int, max_n: int, seed: int, *,
                 undirected: bool = False,
                 max_m: Optional[int] = None) -> Iterator[EdgeList]:
    """Deterministic random corpus for verification runs.

    Per trial: n uniform in [1, max_n], m uniform in [0, max_m] (default
    4n), then the repository generator with a sub-seed drawn from the same
    stream.  Same arguments, same corpus.
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    make = random_undirected if undirected else random_digraph
    for _ in range(trials):
        n = int(rng.integers(1, max_n + 1))
        cap = 4 * n if max_m is None else max_m
        m = int(rng.integers(0, cap + 1))
        yield make(n, m, int(rng.integers(0, 2 ** 63)))
