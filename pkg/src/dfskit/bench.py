"""Benchmark harness: timing grids over (algorithm x graph shape), CSV out.

Protocol per grid point: generate the graph once (seeded, so the same spec
always measures the same inputs), build the CSR form once, then give each
algorithm one untimed warmup call followed by ``repeats`` timed calls.  The
timer spans the algorithm call only — never generation, CSR building, or
I/O.  Kosaraju-Sharir is timed under two ids: ``ks`` (reverse graph built
beforehand, untimed) and ``ks_with_reverse`` (reversal inside the span), so
the cost of the extra pass and of the reversal stay separable.

Aggregation is median-of-repeats (robust to scheduler noise); the CSV of raw
records is the module boundary — plotting lives elsewhere.

Suites:

* ``density`` — fixed m_total, n = m_total/density for each density.
* ``size`` — fixed density 10, n from ``sizes``.
* ``ablation`` — the density grid, but timing the optimization ladder
  (baseline; +overlay; +overlay+edgeStack; +overlay+edgeStack+iterative)
  for both CMG and Tarjan.
* ``bcc`` — the density grid on undirected graphs, same ladder for the
  biconnected-components code.

A grid point that cannot be generated at the requested scale is skipped and
a diagnostic row is recorded (pass a list as ``diagnostics`` to collect
them; the CLI prints them to stderr).  Records never mix with diagnostics —
every BenchRecord is a real measurement.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .bcc import bcc_baseline_compiled, bcc_tuned
from .dfs import EngineKind
from .graph import (
    build_digraph,
    build_undirected,
    random_digraph,
    random_undirected,
    reverse,
)
from .scc import (
    dfs_scan,
    kosaraju_sharir_passes,
    scc_cmg_baseline_compiled,
    scc_cmg_tuned,
    scc_kosaraju_sharir,
    scc_tarjan_baseline_compiled,
    scc_tarjan_tuned,
)

CSV_HEADER = "algo,n,m,run,elapsed_ns,ns_per_edge"
MEDIANS_HEADER = "algo,n,m,median_ns_per_edge"


class Suite(Enum):
    DENSITY_SWEEP = "density"
    SIZE_SWEEP = "size"
    ABLATION = "ablation"
    BCC = "bcc"


@dataclass(frozen=True)
class ExperimentSpec:
    """What to measure; invalid combinations are rejected at construction."""

    suite: Suite
    m_total: int = 1 << 20
    densities: Sequence[int] = (2, 4, 8, 16, 32)
    sizes: Sequence[int] = (1024, 4096, 16384, 65536)
    seed: int = 1
    repeats: int = 5
    algorithms: Optional[Sequence[str]] = None

    def __post_init__(self):
        object.__setattr__(self, "densities", tuple(self.densities))
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if self.algorithms is not None:
            object.__setattr__(self, "algorithms", tuple(self.algorithms))
        if not isinstance(self.suite, Suite):
            raise ValueError(f"suite must be a Suite, got {self.suite!r}")
        if self.repeats < 3:
            raise ValueError(
                f"repeats must be at least 3 for a median, got {self.repeats}")
        if self.m_total < 1:
            raise ValueError(f"m_total must be positive, got {self.m_total}")
        if self.suite is Suite.SIZE_SWEEP:
            if not self.sizes or any(n < 1 for n in self.sizes):
                raise ValueError(f"sizes must be positive, got {self.sizes}")
        else:
            if not self.densities:
                raise ValueError("densities must be non-empty")
            for d in self.densities:
                if d < 1 or self.m_total // d < 1:
                    raise ValueError(
                        f"density {d} leaves no nodes at m_total={self.m_total}")


@dataclass(frozen=True)
class BenchRecord:
    algo: str
    n: int
    m: int
    run: int
    elapsed_ns: int
    ns_per_edge: float


def grid_points(spec: ExperimentSpec) -> List[Tuple[int, int]]:
    """The (n, m) pairs a spec measures, in measurement order."""
    if spec.suite is Suite.SIZE_SWEEP:
        return [(n, 10 * n) for n in spec.sizes]
    return [(spec.m_total // d, spec.m_total) for d in spec.densities]


class _PreparedPoint:
    """One grid point's graph, built outside any timed span."""

    def __init__(self, suite: Suite, n: int, m: int, seed: int):
        self.n = n
        self.m = m
        if suite is Suite.BCC:
            self.g = build_undirected(random_undirected(n, m, seed))
        else:
            self.g = build_digraph(random_digraph(n, m, seed))
        self._g_rev = None

    def g_rev(self):
        if self._g_rev is None:
            self._g_rev = reverse(self.g)
        return self._g_rev


_SCC_RUNNERS: Dict[str, Callable] = {
    "dfs_scan": lambda p: dfs_scan(p.g),
    "cmg_tuned": lambda p: scc_cmg_tuned(p.g),
    "tarjan_tuned": lambda p: scc_tarjan_tuned(p.g),
    "ks": lambda p: kosaraju_sharir_passes(p.g, p.g_rev()),
    "ks_with_reverse": lambda p: scc_kosaraju_sharir(p.g),
}

# The Fig.-7-style ladder: each id adds one optimization to the previous.
_ABLATION_RUNNERS: Dict[str, Callable] = {
    "cmg_base": lambda p: scc_cmg_baseline_compiled(p.g),
    "cmg_overlay": lambda p: scc_cmg_tuned(p.g, EngineKind.RECURSIVE),
    "cmg_overlay_es": lambda p: scc_cmg_tuned(p.g, EngineKind.RECURSIVE_EDGE_STACK),
    "cmg_overlay_es_iter": lambda p: scc_cmg_tuned(p.g, EngineKind.ITERATIVE),
    "tarjan_base": lambda p: scc_tarjan_baseline_compiled(p.g),
    "tarjan_overlay": lambda p: scc_tarjan_tuned(p.g, EngineKind.RECURSIVE),
    "tarjan_overlay_es": lambda p: scc_tarjan_tuned(p.g, EngineKind.RECURSIVE_EDGE_STACK),
    "tarjan_overlay_es_iter": lambda p: scc_tarjan_tuned(p.g, EngineKind.ITERATIVE),
}

_BCC_RUNNERS: Dict[str, Callable] = {
    "bcc_base": lambda p: bcc_baseline_compiled(p.g),
    "bcc_overlay": lambda p: bcc_tuned(p.g, EngineKind.RECURSIVE),
    "bcc_overlay_es": lambda p: bcc_tuned(p.g, EngineKind.RECURSIVE_EDGE_STACK),
    "bcc_overlay_es_iter": lambda p: bcc_tuned(p.g, EngineKind.ITERATIVE),
}


def _runners_for(suite: Suite) -> Dict[str, Callable]:
    if suite is Suite.ABLATION:
        return _ABLATION_RUNNERS
    if suite is Suite.BCC:
        return _BCC_RUNNERS
    return _SCC_RUNNERS


def _algorithms_for(spec: ExperimentSpec) -> List[str]:
    table = _runners_for(spec.suite)
    if spec.algorithms is None:
        return list(table)
    unknown = [a for a in spec.algorithms if a not in table]
    if unknown:
        raise ValueError(
            f"unknown algorithm ids {unknown} for suite {spec.suite.value}; "
            f"known: {sorted(table)}")
    return list(spec.algorithms)


def _diag(sink: Optional[list], message: str) -> None:
    if sink is not None:
        sink.append(message)


def run_suite(spec: ExperimentSpec,
              diagnostics: Optional[list] = None) -> List[BenchRecord]:
    """Measure the spec's grid; see the module docstring for the protocol."""
    algos = _algorithms_for(spec)
    runners = _runners_for(spec.suite)
    records: List[BenchRecord] = []
    for idx, (n, m) in enumerate(grid_points(spec)):
        try:
            prep = _PreparedPoint(spec.suite, n, m, spec.seed + idx)
            if "ks" in algos:
                prep.g_rev()  # built here so the ks span excludes reversal
        except MemoryError as exc:
            _diag(diagnostics,
                  f"grid point n={n} m={m} skipped: out of memory ({exc})")
            continue
        for aid in algos:
            fn = runners[aid]
            try:
                fn(prep)  # warmup (also absorbs JIT compilation), untimed
                point_records = []
                for run in range(spec.repeats):
                    t0 = time.perf_counter_ns()
                    fn(prep)
                    elapsed = time.perf_counter_ns() - t0
                    point_records.append(
                        BenchRecord(aid, n, m, run, elapsed, elapsed / m))
            except MemoryError as exc:
                _diag(diagnostics,
                      f"algo {aid} skipped at n={n} m={m}: out of memory ({exc})")
                continue
            records.extend(point_records)
    return records


def ablation_suite(spec: ExperimentSpec,
                   diagnostics: Optional[list] = None) -> List[BenchRecord]:
    """run_suite restricted to the optimization-ladder suite."""
    if spec.suite is not Suite.ABLATION:
        raise ValueError(f"ablation_suite needs suite=ablation, got "
                         f"{spec.suite.value}")
    return run_suite(spec, diagnostics)


def medians(records: Sequence[BenchRecord]) -> List[Tuple[str, int, int, float]]:
    """Median ns_per_edge per (algo, n, m) group, first-occurrence order."""
    order: List[Tuple[str, int, int]] = []
    groups: Dict[Tuple[str, int, int], List[float]] = {}
    for r in records:
        key = (r.algo, r.n, r.m)
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(r.ns_per_edge)
    return [(a, n, m, float(np.median(groups[(a, n, m)])))
            for (a, n, m) in order]


def write_csv(records: Sequence[BenchRecord], path) -> None:
    """Raw records: header ``algo,n,m,run,elapsed_ns,ns_per_edge``."""
    try:
        with open(path, "w", encoding="ascii", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(CSV_HEADER.split(","))
            for r in records:
                w.writerow([r.algo, r.n, r.m, r.run, r.elapsed_ns,
                            repr(r.ns_per_edge)])
    except OSError as exc:
        raise OSError(f"cannot write benchmark CSV {path}: {exc}") from exc


def read_csv(path) -> List[BenchRecord]:
    """Parse a file written by write_csv back into records."""
    with open(path, "r", encoding="ascii", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != CSV_HEADER.split(","):
        raise ValueError(f"{path}: not a benchmark CSV (bad header)")
    return [BenchRecord(a, int(n), int(m), int(run), int(el), float(npe))
            for a, n, m, run, el, npe in rows[1:]]


def write_medians_csv(records: Sequence[BenchRecord], path) -> None:
    """Companion medians file: ``algo,n,m,median_ns_per_edge``."""
    try:
        with open(path, "w", encoding="ascii", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(MEDIANS_HEADER.split(","))
            for a, n, m, med in medians(records):
                w.writerow([a, n, m, repr(med)])
    except OSError as exc:
        raise OSError(f"cannot write medians CSV {path}: {exc}") from exc
