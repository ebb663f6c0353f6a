"""Graph construction, reversal, generation and edge-list I/O."""

import numpy as np
import pytest

from dfskit.graph import (
    EdgeList,
    GraphFormatError,
    build_digraph,
    build_undirected,
    random_digraph,
    random_undirected,
    read_edge_list,
    reverse,
    write_edge_list,
)


def test_build_digraph_frozen_example():
    g = build_digraph(EdgeList(3, [(0, 1), (0, 2), (2, 0)]))
    assert g.vertex_offset.tolist() == [0, 2, 2, 3]
    assert g.target.tolist() == [1, 2, 0]
    assert g.n == 3 and g.m == 3


def test_build_digraph_single_node_no_edges():
    g = build_digraph(EdgeList(1, []))
    assert g.vertex_offset.tolist() == [0, 0]
    assert g.target.tolist() == []


def test_build_digraph_stable_grouping():
    # input order within each source bucket must be preserved
    g = build_digraph(EdgeList(2, [(1, 0), (0, 1), (1, 1)]))
    assert g.vertex_offset.tolist() == [0, 1, 3]
    assert g.target.tolist() == [1, 0, 1]


def test_build_digraph_rejects_bad_endpoint():
    with pytest.raises(ValueError) as exc:
        EdgeList(3, [(0, 1), (1, 5)])
    assert "edge 1" in str(exc.value) and "(1, 5)" in str(exc.value)
    with pytest.raises(ValueError):
        EdgeList(3, [(-1, 0)])


def test_csr_totals_and_bucket_slices():
    el = random_digraph(37, 190, seed=5)
    g = build_digraph(el)
    assert g.vertex_offset[0] == 0
    assert g.vertex_offset[-1] == g.m
    assert np.all(np.diff(g.vertex_offset) >= 0)
    # every bucket holds exactly the input targets for that source, in order
    by_src = {}
    for u, v in el:
        by_src.setdefault(u, []).append(v)
    for v in range(g.n):
        assert g.out_edges(v).tolist() == by_src.get(v, [])


def test_reverse_frozen_example():
    g = build_digraph(EdgeList(3, [(0, 1), (0, 2), (2, 0)]))
    r = reverse(g)
    assert r.vertex_offset.tolist() == [0, 1, 2, 3]
    assert r.target.tolist() == [2, 0, 0]


def test_reverse_empty():
    r = reverse(build_digraph(EdgeList(0, [])))
    assert r.n == 0 and r.m == 0
    assert r.vertex_offset.tolist() == [0]


def test_reverse_is_involution_on_bucket_multisets():
    for seed in range(12):
        g = build_digraph(random_digraph(23, 70, seed=seed))
        rr = reverse(reverse(g))
        assert rr.vertex_offset.tolist() == g.vertex_offset.tolist()
        for v in range(g.n):
            assert sorted(rr.out_edges(v).tolist()) == sorted(
                g.out_edges(v).tolist())


def test_random_digraph_empty_and_deterministic():
    assert random_digraph(10, 0, seed=7).m == 0
    a = random_digraph(10, 100, seed=7)
    b = random_digraph(10, 100, seed=7)
    assert a == b
    assert a != random_digraph(10, 100, seed=8)


def test_random_digraph_rejects_zero_nodes():
    with pytest.raises(ValueError):
        random_digraph(0, 5, seed=1)
    with pytest.raises(ValueError):
        random_digraph(3, -1, seed=1)


def test_random_undirected_mirrors_digraph_model():
    assert random_undirected(5, 0, seed=3).m == 0
    a = random_undirected(9, 40, seed=11)
    assert a == random_undirected(9, 40, seed=11)
    assert all(0 <= u < 9 and 0 <= v < 9 for u, v in a)


def test_build_undirected_single_edge():
    g = build_undirected(EdgeList(2, [(0, 1)]))
    assert g.m == 1
    t0, e0 = g.arcs(0)
    t1, e1 = g.arcs(1)
    assert t0.tolist() == [1] and e0.tolist() == [0]
    assert t1.tolist() == [0] and e1.tolist() == [0]


def test_build_undirected_triangle_twin_arcs():
    g = build_undirected(EdgeList(3, [(0, 1), (1, 2), (2, 0)]))
    assert len(g.arc_target) == 6
    counts = np.bincount(g.arc_edge_id, minlength=3)
    assert counts.tolist() == [2, 2, 2]


def test_build_undirected_self_loop():
    g = build_undirected(EdgeList(1, [(0, 0)]))
    tgt, eid = g.arcs(0)
    assert tgt.tolist() == [0, 0]
    assert eid.tolist() == [0, 0]


def test_edge_list_file_frozen_examples(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("3 2\n0 1\n2 0\n")
    el = read_edge_list(p)
    assert el.n == 3 and list(el) == [(0, 1), (2, 0)]

    p.write_text("1 0\n")
    el = read_edge_list(p)
    assert el.n == 1 and el.m == 0


def test_edge_list_round_trip(tmp_path):
    el = random_digraph(100, 1000, seed=5)
    p = tmp_path / "rt.txt"
    write_edge_list(el, p)
    assert read_edge_list(p) == el
    # written form is exactly the documented text format
    lines = p.read_text().splitlines()
    assert lines[0] == "100 1000" and len(lines) == 1001


def test_edge_list_write_empty(tmp_path):
    p = tmp_path / "e.txt"
    write_edge_list(EdgeList(4, []), p)
    assert p.read_text() == "4 0\n"


def test_read_edge_list_errors_carry_line_numbers(tmp_path):
    p = tmp_path / "bad.txt"
    cases = [
        ("", ":1:"),                      # empty file
        ("3\n", ":1:"),                   # malformed header
        ("x y\n", ":1:"),                 # non-integer header
        ("-1 2\n0 1\n1 0\n", ":1:"),      # negative count
        ("3 2\n0 1\n", ":3:"),            # truncated
        ("3 2\n0 1\n2\n", ":3:"),         # malformed edge line
        ("3 2\n0 1\na b\n", ":3:"),       # non-integer endpoint
        ("3 2\n0 1\n0 3\n", ":3:"),       # endpoint out of range
        ("3 1\n0 1\n2 0\n", ":3:"),       # trailing content
    ]
    for text, needle in cases:
        p.write_text(text)
        with pytest.raises(GraphFormatError) as exc:
            read_edge_list(p)
        assert needle in str(exc.value), (text, str(exc.value))


def test_read_edge_list_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_edge_list(tmp_path / "nope.txt")
