"""Generic depth-first search with pluggable hooks and interchangeable engines.

The driver visits roots in increasing node id and out-edges in adjacency-array
order.  Client algorithms supply a hook object; the framework itself keeps no
visited state — it asks the hooks "is w unvisited?" so that clients can fold
the visited mark into whatever label array they already maintain.

Three engines produce identical hook-call transcripts:

* ``RECURSIVE`` — the textbook shape: plain recursion, adjacency scanned in
  place.
* ``RECURSIVE_EDGE_STACK`` — recursion, but each node's targets are copied to
  a shared bounded stack on entry (reverse order, so pops preserve adjacency
  order) and the scan pops from that stack.
* ``ITERATIVE`` — explicit frame stack plus the shared edge stack; never
  deepens the call stack, so it is the default and the only engine safe at
  arbitrary graph sizes without stack provisioning.

The recursive engines estimate their call-stack need up front and, when it
exceeds what the process stack can take, transparently run the traversal on a
worker thread created with enough stack.
"""

from __future__ import annotations

import queue
import resource
import sys
import threading
from enum import Enum
from typing import Optional

# Conservative per-frame budgets for sizing recursion stacks.  Measured on
# CPython 3.10 / x86-64 Linux: an interpreted frame costs ~0.5 KiB of C stack
# and a compiled (numba) DFS frame ~0.6 KiB; the budgets leave generous slack
# because undershooting means a hard crash, while overshooting merely reserves
# untouched virtual memory.
INTERP_FRAME_BYTES = 8192
COMPILED_FRAME_BYTES = 2048

_STACK_MARGIN = 4 << 20


class StackCapacityError(RuntimeError):
    """Push on a full BoundedStack — a program-logic error, never a drop."""


class BoundedStack:
    """Fixed-capacity LIFO used for the open, roots and edge stacks.

    Tracks total pushes and peak size so tests can assert the conservation
    properties (an edge stack sees exactly m pushes over a full traversal).
    """

    __slots__ = ("capacity", "pushes", "peak", "_items")

    def __init__(self, capacity: int):
        self.capacity = int(capacity)
        self.pushes = 0
        self.peak = 0
        self._items: list = []

    def push(self, item) -> None:
        items = self._items
        if len(items) >= self.capacity:
            raise StackCapacityError(
                f"push onto full BoundedStack(capacity={self.capacity})"
            )
        items.append(item)
        self.pushes += 1
        if len(items) > self.peak:
            self.peak = len(items)

    def pop(self):
        return self._items.pop()

    def top(self):
        return self._items[-1]

    def size(self) -> int:
        return len(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __repr__(self) -> str:
        return f"BoundedStack(size={len(self._items)}, capacity={self.capacity})"


class EngineKind(Enum):
    RECURSIVE = "recursive"
    RECURSIVE_EDGE_STACK = "recursive-edge-stack"
    ITERATIVE = "iterative"


class DfsHooks:
    """Base hook set: five no-op callbacks plus the visited predicate.

    Subclasses must implement is_unvisited and make tree_edge(v) flip it —
    the framework marks nothing itself.  Hooks may mutate only their own
    state (label arrays, stacks); never the graph.
    """

    def init(self) -> None:
        pass

    def tree_edge(self, v: int) -> None:
        """v has just been entered (the figure passes the node, not the edge)."""

    def non_tree_edge(self, u: int, v: int) -> None:
        """Edge (u, v) scanned but v was already visited."""

    def finish_tree_edge(self, u: int, v: int) -> None:
        """The descent dfs(v) below u has returned."""

    def finish_node(self, v: int) -> None:
        """All out-edges of v are explored."""

    def is_unvisited(self, v: int) -> bool:
        raise NotImplementedError


def push_out_edges_reversed(g, v: int, edge_stack: BoundedStack) -> int:
    """Copy v's targets onto the shared edge stack in reverse adjacency order.

    Returns the stack size before pushing (the watermark): popping while the
    size stays above it yields exactly v's targets, in adjacency order.
    """
    mark = edge_stack.size()
    targets = g.out_edges(v)
    for w in targets[::-1].tolist():
        edge_stack.push(w)
    return mark


def dfs_all(g, hooks: DfsHooks, engine: EngineKind = EngineKind.ITERATIVE,
            edge_stack: BoundedStack | None = None) -> None:
    """Run a full DFS over g, firing hooks; see the module docstring.

    ``edge_stack`` lets callers supply the shared stack for the two engines
    that use one (capacity must be at least m); by default a fresh
    BoundedStack(m) is created per call.
    """
    hooks.init()
    if engine is EngineKind.RECURSIVE:
        _deep_call(lambda: _run_recursive(g, hooks), g.n)
    elif engine is EngineKind.RECURSIVE_EDGE_STACK:
        es = edge_stack if edge_stack is not None else BoundedStack(g.m)
        _deep_call(lambda: _run_recursive_edge_stack(g, hooks, es), g.n)
    elif engine is EngineKind.ITERATIVE:
        es = edge_stack if edge_stack is not None else BoundedStack(g.m)
        _run_iterative(g, hooks, es)
    else:
        raise ValueError(f"unknown engine {engine!r}")


def _run_recursive(g, hooks: DfsHooks) -> None:
    off = g.vertex_offset.tolist()
    tgt = g.target.tolist()
    unvisited = hooks.is_unvisited

    def dfs(v):
        hooks.tree_edge(v)
        for i in range(off[v], off[v + 1]):
            w = tgt[i]
            if unvisited(w):
                dfs(w)
                hooks.finish_tree_edge(v, w)
            else:
                hooks.non_tree_edge(v, w)
        hooks.finish_node(v)

    for r in range(g.n):
        if unvisited(r):
            dfs(r)


def _run_recursive_edge_stack(g, hooks: DfsHooks, es: BoundedStack) -> None:
    unvisited = hooks.is_unvisited

    def dfs(v):
        hooks.tree_edge(v)
        mark = push_out_edges_reversed(g, v, es)
        while es.size() > mark:
            w = es.pop()
            if unvisited(w):
                dfs(w)
                hooks.finish_tree_edge(v, w)
            else:
                hooks.non_tree_edge(v, w)
        hooks.finish_node(v)

    for r in range(g.n):
        if unvisited(r):
            dfs(r)


def _run_iterative(g, hooks: DfsHooks, es: BoundedStack) -> None:
    unvisited = hooks.is_unvisited
    frames: list = []  # (node, edge-stack watermark) pairs
    for r in range(g.n):
        if not unvisited(r):
            continue
        hooks.tree_edge(r)
        frames.append((r, push_out_edges_reversed(g, r, es)))
        while frames:
            v, mark = frames[-1]
            child = -1
            while es.size() > mark:
                w = es.pop()
                if unvisited(w):
                    child = w
                    break
                hooks.non_tree_edge(v, w)
            if child >= 0:
                hooks.tree_edge(child)
                frames.append((child, push_out_edges_reversed(g, child, es)))
                continue
            frames.pop()
            hooks.finish_node(v)
            if frames:
                hooks.finish_tree_edge(frames[-1][0], v)


# ---------------------------------------------------------------------------
# Stack provisioning for recursive engines (and recursive compiled kernels)
# ---------------------------------------------------------------------------


def stack_headroom_bytes(depth: int, frame_bytes: int = INTERP_FRAME_BYTES) -> int:
    """Estimated call-stack need for a recursion of the given depth."""
    return depth * frame_bytes + _STACK_MARGIN


def _main_stack_budget() -> int:
    soft, _ = resource.getrlimit(resource.RLIMIT_STACK)
    if soft == resource.RLIM_INFINITY:
        return 1 << 28
    return max(int(soft) - _STACK_MARGIN, 1 << 20)


class _BigStackWorker:
    """One reusable thread with an oversized stack.

    Deep recursions borrow it instead of spawning a thread per call: the
    stack pages stay resident between calls, so repeated deep traversals
    pay neither thread creation nor the page-fault storm of touching tens
    of megabytes of fresh stack (which would otherwise land inside every
    timed benchmark run).  Borrowers are serialized by a lock — the
    recursive kernels hold the GIL anyway — and the thread is replaced by
    a bigger one when a caller's estimate outgrows it.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._jobs: Optional[queue.SimpleQueue] = None
        self._thread: Optional[threading.Thread] = None
        self._size = 0

    @staticmethod
    def _loop(jobs):
        while True:
            job = jobs.get()
            if job is None:
                return
            fn, box, done = job
            try:
                box.append((True, fn()))
            except BaseException as exc:  # rethrown in the borrowing thread
                box.append((False, exc))
            done.set()

    def _retire(self):
        if self._thread is not None:
            self._jobs.put(None)
            self._thread.join()
            self._jobs = self._thread = None
            self._size = 0

    def _ensure(self, need: int, depth: int):
        if (self._thread is not None and self._thread.is_alive()
                and self._size >= need):
            return
        size = 32 << 20
        while size < need:
            size *= 2
        self._retire()
        jobs: queue.SimpleQueue = queue.SimpleQueue()
        old = threading.stack_size(size)
        try:
            thread = threading.Thread(target=self._loop, args=(jobs,),
                                      name="dfskit-deep-stack", daemon=True)
            try:
                thread.start()
            except RuntimeError as exc:
                raise MemoryError(
                    f"could not reserve a {size >> 20} MiB stack for "
                    f"recursion depth {depth}"
                ) from exc
        finally:
            threading.stack_size(old)
        self._jobs, self._thread, self._size = jobs, thread, size

    def run(self, fn, need: int, depth: int):
        if threading.current_thread() is self._thread:
            return fn()  # reentrant call: already on the big stack
        with self._lock:
            self._ensure(need, depth)
            box: list = []
            done = threading.Event()
            self._jobs.put((fn, box, done))
            done.wait()
        ok, value = box[0]
        if ok:
            return value
        raise value


_WORKER = _BigStackWorker()


def call_with_stack_headroom(fn, depth: int,
                             frame_bytes: int = INTERP_FRAME_BYTES):
    """Call fn(), on a dedicated big-stack thread if ``depth`` requires one.

    Recursion depth in a DFS is bounded by n, which routinely exceeds what
    the default process stack can hold.  When the estimate fits the main
    stack the call happens inline; otherwise it runs on a shared worker
    thread whose stack is reserved to the estimate (virtual memory —
    untouched pages cost nothing) and which persists across calls.
    Exceptions propagate; a failure to create the thread surfaces as
    MemoryError.
    """
    need = stack_headroom_bytes(depth, frame_bytes)
    if need <= _main_stack_budget():
        return fn()
    return _WORKER.run(fn, need, depth)


def _deep_call(fn, depth: int):
    """Run an interpreted recursion of at most ``depth`` levels safely."""

    def with_limit():
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, depth + 512))
        try:
            return fn()
        finally:
            sys.setrecursionlimit(old)

    return call_with_stack_headroom(with_limit, depth + 512, INTERP_FRAME_BYTES)
