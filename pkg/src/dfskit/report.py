"""Render benchmark results as figures.

The bench module stops at CSV; this is the downstream consumer that turns
median ns-per-edge into PNG plots.  Works from in-memory records or from a
CSV written by bench.write_csv.
"""

from __future__ import annotations

import os
from typing import List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .bench import BenchRecord, medians, read_csv  # noqa: E402


def render_medians(records: Sequence[BenchRecord], out_dir,
                   *, stem: str = "bench") -> List[str]:
    """Plot median ns/edge per algorithm and save ``<stem>_ns_per_edge.png``.

    The x axis adapts to the grid: when every record shares one m (density
    and ablation sweeps) it is edge density m/n; otherwise it is n (size
    sweep).  Returns the list of written paths (empty for no records).
    """
    if not records:
        return []
    os.makedirs(out_dir, exist_ok=True)
    med = medians(records)
    fixed_m = len({m for _, _, m, _ in med}) == 1

    series: dict = {}
    for algo, n, m, value in med:
        x = (m / n) if fixed_m else n
        series.setdefault(algo, []).append((x, value))

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for algo, pts in series.items():
        pts.sort()
        ax.plot([x for x, _ in pts], [y for _, y in pts],
                marker="o", label=algo)
    ax.set_xscale("log", base=2)
    ax.set_xlabel("edge density m/n" if fixed_m else "nodes n")
    ax.set_ylabel("median ns / edge")
    ax.set_ylim(bottom=0)
    ax.grid(True, which="both", linewidth=0.3, alpha=0.6)
    ax.legend(fontsize="small")
    fig.tight_layout()
    path = os.path.join(out_dir, f"{stem}_ns_per_edge.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return [path]


def render_csv(csv_path, out_dir, *, stem: Optional[str] = None) -> List[str]:
    """render_medians over a CSV produced by bench.write_csv."""
    if stem is None:
        stem = os.path.splitext(os.path.basename(str(csv_path)))[0]
    return render_medians(read_csv(csv_path), out_dir, stem=stem)
