"""Command-line interface: gen | scc | bcc | verify | bench.

Machine-readable output (counts, labels, CSV) goes to standard output or the
requested files; diagnostics and warnings go to standard error.  Exit codes:
0 success, 1 runtime or I/O failure (missing or malformed input, write
errors), 2 usage error (bad flags, violated preconditions, oracle caps).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bcc import bcc_baseline, bcc_tuned
from .bench import ExperimentSpec, Suite, run_suite, write_csv, write_medians_csv
from .dfs import (
    COMPILED_FRAME_BYTES,
    INTERP_FRAME_BYTES,
    EngineKind,
    stack_headroom_bytes,
)
from .graph import (
    GraphFormatError,
    build_digraph,
    build_undirected,
    random_digraph,
    random_undirected,
    read_edge_list,
    write_edge_list,
)
from .oracle import (
    BCC_ORACLE_MAX_M,
    BCC_ORACLE_MAX_N,
    ORACLE_MAX_N,
    OracleCapError,
    bcc_oracle,
    scc_oracle,
    trial_graphs,
)
from .scc import (
    SccLabeling,
    partitions_equal,
    scc_cmg_baseline,
    scc_cmg_tuned,
    scc_kosaraju_sharir,
    scc_tarjan_baseline,
    scc_tarjan_tuned,
)


def _write_labels(path, values: np.ndarray) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.writelines(f"{v}\n" for v in values.tolist())


def _warn_recursive(n: int, frame_bytes: int) -> None:
    est = stack_headroom_bytes(n, frame_bytes)
    print(
        f"warning: recursive engine on n={n} nodes may need about {est} bytes "
        f"of call stack ({frame_bytes} bytes/frame x n plus margin); a "
        f"dedicated big-stack thread is provisioned when the main stack is "
        f"too small",
        file=sys.stderr,
    )


def cmd_gen(args) -> int:
    make = random_undirected if args.undirected else random_digraph
    el = make(args.nodes, args.edges, args.seed)
    write_edge_list(el, args.out)
    return 0


def cmd_scc(args) -> int:
    el = read_edge_list(args.infile)
    g = build_digraph(el)
    recursive = args.engine == "recursive"
    if args.algo == "ks":
        # two fixed iterative passes; the engine flag does not apply
        lab = scc_kosaraju_sharir(g)
    elif args.algo in ("tarjan", "cmg"):
        if recursive:
            _warn_recursive(g.n, INTERP_FRAME_BYTES)
        engine = EngineKind.RECURSIVE if recursive else EngineKind.ITERATIVE
        fn = scc_tarjan_baseline if args.algo == "tarjan" else scc_cmg_baseline
        lab = fn(g, engine)
    else:
        if recursive:
            _warn_recursive(g.n, COMPILED_FRAME_BYTES)
        engine = (EngineKind.RECURSIVE_EDGE_STACK if recursive
                  else EngineKind.ITERATIVE)
        fn = (scc_tarjan_tuned if args.algo == "tarjan-tuned"
              else scc_cmg_tuned)
        lab = fn(g, engine)
    print(f"sccCount={lab.scc_count}")
    if args.out:
        _write_labels(args.out, lab.comp_num)
    return 0


def cmd_bcc(args) -> int:
    el = read_edge_list(args.infile)
    g = build_undirected(el)
    lab = bcc_baseline(g) if args.algo == "base" else bcc_tuned(g)
    print(f"bccCount={lab.bcc_count}")
    if args.out:
        _write_labels(args.out, lab.edge_comp)
    return 0


def _print_counterexample(el) -> None:
    print(f"{el.n} {el.m}")
    for u, v in el.pairs.tolist():
        print(f"{u} {v}")


def cmd_verify(args) -> int:
    if args.trials < 0:
        raise ValueError(f"--trials must be non-negative, got {args.trials}")
    if args.max_n < 1:
        raise ValueError(f"--max-n must be at least 1, got {args.max_n}")
    if args.bcc:
        if args.max_n > BCC_ORACLE_MAX_N:
            raise OracleCapError(
                f"--max-n {args.max_n} exceeds the BCC oracle cap "
                f"(n <= {BCC_ORACLE_MAX_N})")
        corpus = trial_graphs(args.trials, args.max_n, args.seed,
                              undirected=True, max_m=BCC_ORACLE_MAX_M)
    else:
        if args.max_n > ORACLE_MAX_N:
            raise OracleCapError(
                f"--max-n {args.max_n} exceeds the SCC oracle cap "
                f"(n <= {ORACLE_MAX_N})")
        corpus = trial_graphs(args.trials, args.max_n, args.seed)

    checked = 0
    for el in corpus:
        if args.bcc:
            g = build_undirected(el)
            want = bcc_oracle(g)
            base = bcc_baseline(g)
            tuned = bcc_tuned(g)
            ok = (np.array_equal(base.edge_comp, tuned.edge_comp)
                  and base.bcc_count == tuned.bcc_count
                  and partitions_equal(
                      SccLabeling(base.edge_comp, base.bcc_count),
                      SccLabeling(want.edge_comp, want.bcc_count)))
        else:
            g = build_digraph(el)
            want = scc_oracle(g)
            ok = all(partitions_equal(lab, want) for lab in (
                scc_kosaraju_sharir(g),
                scc_tarjan_baseline(g),
                scc_cmg_baseline(g),
                scc_tarjan_tuned(g),
                scc_cmg_tuned(g),
            ))
        if not ok:
            print(f"verify: trial {checked} disagrees with the oracle; "
                  f"counterexample follows on stdout", file=sys.stderr)
            _print_counterexample(el)
            return 1
        checked += 1
    kind = "bcc" if args.bcc else "scc"
    print(f"verify({kind}): {checked} trials agree with the oracle "
          f"(max-n={args.max_n}, seed={args.seed})", file=sys.stderr)
    return 0


def cmd_bench(args) -> int:
    spec = ExperimentSpec(suite=Suite(args.suite), m_total=args.m_total,
                          seed=args.seed, repeats=args.repeats)
    diagnostics: list = []
    records = run_suite(spec, diagnostics)
    for note in diagnostics:
        print(f"note: {note}", file=sys.stderr)
    write_csv(records, args.csv)
    if args.medians:
        write_medians_csv(records, args.medians)
    if args.plot_dir:
        from .report import render_medians  # deferred: pulls in matplotlib

        for path in render_medians(records, args.plot_dir, stem=args.suite):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dfskit",
        description="Engineered DFS: SCC/BCC algorithms, verification, "
                    "benchmarks.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random edge-list file")
    g.add_argument("--nodes", type=int, required=True)
    g.add_argument("--edges", type=int, required=True)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--undirected", action="store_true",
                   help="read the pairs as undirected edges")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("scc", help="strongly connected components")
    s.add_argument("--algo", required=True,
                   choices=["ks", "tarjan", "cmg", "tarjan-tuned", "cmg-tuned"])
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--engine", choices=["recursive", "iterative"],
                   default="iterative",
                   help="traversal engine (ignored by ks); default iterative")
    s.add_argument("--out", help="write compNum, one line per node")
    s.set_defaults(func=cmd_scc)

    b = sub.add_parser("bcc", help="biconnected components")
    b.add_argument("--algo", required=True, choices=["base", "tuned"])
    b.add_argument("--in", dest="infile", required=True)
    b.add_argument("--out", help="write edgeComp, one line per edge")
    b.set_defaults(func=cmd_bcc)

    v = sub.add_parser("verify", help="check algorithms against the oracle "
                                      "on random trials")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--max-n", type=int, default=64)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--bcc", action="store_true",
                   help="verify biconnected components instead of SCC")
    v.set_defaults(func=cmd_verify)

    be = sub.add_parser("bench", help="run a timing suite and write CSV")
    be.add_argument("--suite", required=True,
                    choices=[s.value for s in Suite])
    be.add_argument("--m-total", type=int, default=1 << 20)
    be.add_argument("--seed", type=int, default=1)
    be.add_argument("--repeats", type=int, default=5)
    be.add_argument("--csv", required=True)
    be.add_argument("--medians", help="also write a medians CSV here")
    be.add_argument("--plot-dir",
                    help="also render median figures (PNG) into this directory")
    be.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the diagnostic
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MemoryError as exc:
        print(f"error: out of memory: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
