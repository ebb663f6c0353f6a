"""dfskit: engineered depth-first search — SCC and BCC algorithms, their
textbook baselines, a brute-force oracle, and a benchmark harness."""

from .graph import (
    MAX_EDGES,
    MAX_NODES,
    EdgeList,
    GraphFormatError,
    StaticDigraph,
    StaticUndirectedGraph,
    build_digraph,
    build_undirected,
    random_digraph,
    random_undirected,
    read_edge_list,
    reverse,
    write_edge_list,
)
from .dfs import (
    BoundedStack,
    DfsHooks,
    EngineKind,
    StackCapacityError,
    call_with_stack_headroom,
    dfs_all,
    push_out_edges_reversed,
    stack_headroom_bytes,
)
from .scc import (
    SccLabeling,
    dfs_scan,
    kosaraju_sharir_passes,
    partitions_equal,
    scc_cmg_baseline,
    scc_cmg_tuned,
    scc_kosaraju_sharir,
    scc_tarjan_baseline,
    scc_tarjan_tuned,
)
from .bcc import (
    BccLabeling,
    articulation_points,
    bcc_baseline,
    bcc_tuned,
)
from .oracle import (
    OracleCapError,
    ReachabilityMatrix,
    bcc_oracle,
    reachability_closure,
    scc_oracle,
    trial_graphs,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
