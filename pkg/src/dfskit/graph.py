"""Static graph structures: CSR adjacency arrays, reversal, generation, file I/O.

The toolkit works on immutable compressed-sparse-row graphs.  A digraph is a
``vertex_offset`` array of length n+1 plus a flat ``target`` array of length m;
the out-edges of node v occupy ``target[vertex_offset[v]:vertex_offset[v+1]]``.
Undirected graphs store each edge as two twin arcs that share an edge id.

Node ids are 0-based.  n is capped at 2**31 - 2 and m at 2**31 - 1 so that all
per-node labels (including the negated encodings used by the tuned algorithms)
fit signed 32-bit arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import csr_from_pairs, csr_reverse, csr_undirected

MAX_NODES = 2**31 - 2
MAX_EDGES = 2**31 - 1

_EMPTY_PAIRS = np.empty((0, 2), dtype=np.int32)


class GraphFormatError(ValueError):
    """A malformed edge-list file; the message carries path and line number."""


def _check_node_count(n: int) -> int:
    n = int(n)
    if n < 0:
        raise ValueError(f"node count must be non-negative, got {n}")
    if n > MAX_NODES:
        raise ValueError(f"node count {n} exceeds the 2**31 - 2 limit")
    return n


def _check_endpoints(n: int, pairs: np.ndarray) -> None:
    """Raise on the first endpoint outside [0, n), naming the offending pair."""
    if pairs.size == 0:
        return
    bad = (pairs < 0) | (pairs >= n)
    if bad.any():
        i = int(np.flatnonzero(bad.any(axis=1))[0])
        u, v = (int(x) for x in pairs[i])
        raise ValueError(
            f"edge {i} = ({u}, {v}) has an endpoint outside [0, {n})"
        )


class EdgeList:
    """A node count plus an ordered sequence of (source, target) pairs.

    The interchange form between generators, file I/O and graph construction.
    Pair order is meaningful: CSR construction groups stably by source, so two
    EdgeLists with the same pairs in different orders build different (if
    equivalent) graphs.  Self-loops and duplicate edges are allowed.
    """

    __slots__ = ("n", "pairs")

    def __init__(self, n: int, pairs=None):
        self.n = _check_node_count(n)
        if pairs is None:
            arr = _EMPTY_PAIRS
        else:
            arr = np.ascontiguousarray(np.asarray(pairs, dtype=np.int32))
            if arr.size == 0:
                arr = _EMPTY_PAIRS
            elif arr.ndim != 2 or arr.shape[1] != 2:
                raise ValueError("pairs must be a sequence of (u, v) pairs")
        if len(arr) > MAX_EDGES:
            raise ValueError(f"edge count {len(arr)} exceeds the 2**31 - 1 limit")
        _check_endpoints(self.n, arr)
        self.pairs = arr

    @property
    def m(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        for u, v in self.pairs:
            yield int(u), int(v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeList):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.pairs, other.pairs)

    __hash__ = None  # mutable array payload

    def __repr__(self) -> str:
        return f"EdgeList(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False, repr=False)
class StaticDigraph:
    """Immutable CSR digraph; construct via build_digraph."""

    n: int
    m: int
    vertex_offset: np.ndarray  # int32, length n+1
    target: np.ndarray  # int32, length m

    def out_edges(self, v: int) -> np.ndarray:
        """Targets of v's out-edges, in adjacency order (a read-only view)."""
        return self.target[self.vertex_offset[v]:self.vertex_offset[v + 1]]

    def out_degree(self, v: int) -> int:
        return int(self.vertex_offset[v + 1] - self.vertex_offset[v])

    def __repr__(self) -> str:
        return f"StaticDigraph(n={self.n}, m={self.m})"


@dataclass(frozen=True, eq=False, repr=False)
class StaticUndirectedGraph:
    """Immutable undirected graph as 2m twin arcs; construct via build_undirected.

    Arc i of edge e runs u->v and has a twin v->u; both carry arc_edge_id = e.
    A self-loop contributes two arcs at the same vertex.
    """

    n: int
    m: int  # undirected edge count; there are 2m arcs
    vertex_offset: np.ndarray  # int32, length n+1
    arc_target: np.ndarray  # int32, length 2m
    arc_edge_id: np.ndarray  # int32, length 2m

    def arcs(self, v: int):
        """(target, edge_id) array views for v's incident arcs."""
        lo, hi = self.vertex_offset[v], self.vertex_offset[v + 1]
        return self.arc_target[lo:hi], self.arc_edge_id[lo:hi]

    @property
    def target(self) -> np.ndarray:
        """Alias of arc_target so the DFS driver can treat arcs as out-edges."""
        return self.arc_target

    def out_edges(self, v: int) -> np.ndarray:
        lo, hi = self.vertex_offset[v], self.vertex_offset[v + 1]
        return self.arc_target[lo:hi]

    def __repr__(self) -> str:
        return f"StaticUndirectedGraph(n={self.n}, m={self.m})"


def build_digraph(el: EdgeList) -> StaticDigraph:
    """Build the CSR form of an edge list (stable counting sort by source)."""
    _check_endpoints(el.n, el.pairs)
    src = np.ascontiguousarray(el.pairs[:, 0])
    dst = np.ascontiguousarray(el.pairs[:, 1])
    vo, tg = csr_from_pairs(el.n, src, dst)
    return StaticDigraph(el.n, el.m, vo, tg)


def reverse(g: StaticDigraph) -> StaticDigraph:
    """The digraph with every edge (u, v) replaced by (v, u).

    Implemented as a stable counting sort of the edges by target, so the
    result is deterministic: bucket v of the reverse graph lists sources in
    the order their edges appear in g.
    """
    rvo, rtg = csr_reverse(g.n, g.vertex_offset, g.target)
    return StaticDigraph(g.n, g.m, rvo, rtg)


def build_undirected(el: EdgeList) -> StaticUndirectedGraph:
    """Build the twin-arc CSR form of an undirected edge list."""
    _check_endpoints(el.n, el.pairs)
    src = np.ascontiguousarray(el.pairs[:, 0])
    dst = np.ascontiguousarray(el.pairs[:, 1])
    if 2 * el.m > MAX_EDGES:
        raise ValueError(f"{el.m} undirected edges need {2 * el.m} arcs, over the limit")
    vo, arc_target, arc_edge_id = csr_undirected(el.n, src, dst)
    return StaticUndirectedGraph(el.n, el.m, vo, arc_target, arc_edge_id)


def _random_pairs(n: int, m: int, seed: int) -> np.ndarray:
    if n < 1:
        raise ValueError(f"random graph needs n >= 1 to draw endpoints, got n={n}")
    if m < 0:
        raise ValueError(f"edge count must be non-negative, got {m}")
    if m > MAX_EDGES:
        raise ValueError(f"edge count {m} exceeds the 2**31 - 1 limit")
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.integers(0, n, size=(m, 2), dtype=np.int32)


def random_digraph(n: int, m: int, seed: int) -> EdgeList:
    """m edges with endpoints drawn independently and uniformly from [0, n).

    Deterministic: the generator is PCG64 seeded directly with ``seed``, and
    the draw is a single ``integers(0, n, size=(m, 2), dtype=int32)`` call
    whose row i gives edge i as (source, target).  That derivation is part of
    this package's contract — fixtures and benchmarks rely on equal seeds
    producing byte-identical edge lists across platforms.

    Self-loops and duplicate edges occur naturally and are kept.
    """
    return EdgeList(n, _random_pairs(n, m, seed))


def random_undirected(n: int, m: int, seed: int) -> EdgeList:
    """Like random_digraph, with the pairs read as undirected edges."""
    return EdgeList(n, _random_pairs(n, m, seed))


def write_edge_list(el: EdgeList, path) -> None:
    """Write the text form: header "n m", then one "u v" line per edge (LF)."""
    pairs = el.pairs
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(f"{el.n} {el.m}\n")
        # chunked join keeps big writes fast without building one giant string
        for lo in range(0, el.m, 65536):
            chunk = pairs[lo:lo + 65536]
            f.write("\n".join(f"{u} {v}" for u, v in chunk.tolist()))
            if len(chunk):
                f.write("\n")


def read_edge_list(path) -> EdgeList:
    """Parse the edge-list text format back into an EdgeList.

    Errors (malformed line, endpoint out of range, truncated or overlong
    file) raise GraphFormatError naming the 1-based line number.
    """
    with open(path, "r", encoding="ascii") as f:
        header = f.readline()
        if not header.strip():
            raise GraphFormatError(f"{path}:1: expected header 'n m', got empty line")
        parts = header.split()
        if len(parts) != 2:
            raise GraphFormatError(f"{path}:1: expected header 'n m', got {header!r}")
        try:
            n, m = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"{path}:1: non-integer header {header!r}") from None
        if n < 0 or m < 0:
            raise GraphFormatError(f"{path}:1: negative count in header {header!r}")
        if n > MAX_NODES or m > MAX_EDGES:
            raise GraphFormatError(f"{path}:1: header {header!r} exceeds size limits")
        pairs = np.empty((m, 2), dtype=np.int32)
        for i in range(m):
            line = f.readline()
            lineno = i + 2
            if not line:
                raise GraphFormatError(
                    f"{path}:{lineno}: file truncated, expected {m} edge lines"
                )
            parts = line.split()
            if len(parts) != 2:
                raise GraphFormatError(
                    f"{path}:{lineno}: expected 'u v', got {line.rstrip()!r}"
                )
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(
                    f"{path}:{lineno}: non-integer endpoint in {line.rstrip()!r}"
                ) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(
                    f"{path}:{lineno}: endpoint out of range [0, {n}) in ({u}, {v})"
                )
            pairs[i, 0] = u
            pairs[i, 1] = v
        trailing = f.read()
        if trailing.strip():
            extra = trailing.strip().splitlines()[0]
            raise GraphFormatError(
                f"{path}:{m + 2}: expected end of file after {m} edges, got {extra!r}"
            )
    return EdgeList(n, pairs)
