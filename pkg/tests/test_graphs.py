"""Graph values, text formats, enumeration, isomorphism, and the
recognition oracles cross-checked against one another and against
induced-subgraph scans."""

import itertools
import math

import pytest
from hypothesis import given, settings

from conftest import graph_from_mask, small_graphs
from langrep import oracles
from langrep.errors import FormatError
from langrep.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    graph_from_edge_list,
    graph_from_json,
    graph_to_dot,
    graph_to_edge_list,
    graph_to_json,
    null_graph,
    parse_graph,
    path_graph,
)
from langrep.isomorphism import (
    automorphism_count,
    distinct_labelings,
    enumerate_graphs,
    isomorphic,
)


def test_graph_basics():
    g = Graph("abc", [("a", "b")])
    assert g.order == 3 and g.size == 1
    assert g.has_edge("a", "b") and g.has_edge("b", "a")
    assert not g.has_edge("a", "c")
    assert g.neighbors("a") == frozenset({"b"})
    assert g.degree("c") == 0
    assert list(g.isolated_vertices()) == ["c"]


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph([], [])
    with pytest.raises(ValueError):
        Graph("ab", [("a", "a")])  # loop
    with pytest.raises(ValueError):
        Graph("ab", [("a", "z")])  # unknown endpoint
    # vertex collections are read as sets
    assert Graph(["a", "a"], []).order == 1


def test_graph_equality_is_labeled():
    assert Graph("ab", [("a", "b")]) == Graph(["b", "a"], [("b", "a")])
    assert Graph("ab", []) != Graph("ac", [])
    assert Graph("ab", []) != Graph("ab", [("a", "b")])


def test_complement_union_join_induced():
    p3 = path_graph(3)
    assert p3.complement().size == 1
    assert p3.complement().complement() == p3
    g = Graph("ab", [("a", "b")]).union(Graph("cd", []))
    assert g.order == 4 and g.size == 1
    j = Graph("ab", []).join(Graph("cd", []))
    assert j.size == 4  # only the cross edges
    sub = cycle_graph(4).induced(["v1", "v2", "v3"])
    assert sub == path_graph(3)


def test_relabel_and_twins():
    g = cycle_graph(3).relabel({"v1": "x", "v2": "y", "v3": "z"})
    assert set(g.vertices) == {"x", "y", "z"} and g.size == 3
    t = path_graph(2).add_twin("v1", "w", true_twin=True)
    assert t.has_edge("v1", "w") and t.has_edge("w", "v2")
    f = path_graph(2).add_twin("v1", "w", true_twin=False)
    assert not f.has_edge("v1", "w") and f.has_edge("w", "v2")
    assert path_graph(2).add_isolated("w").degree("w") == 0
    assert path_graph(2).add_universal("w").degree("w") == 2


def test_families():
    assert null_graph(4).size == 0
    assert complete_graph(5).size == 10
    assert path_graph(5).size == 4
    assert cycle_graph(5).size == 5
    assert complete_bipartite(2, 3).size == 6


def test_text_formats_round_trip():
    g = Graph(["a", "b", "lonely"], [("a", "b")])
    assert graph_from_json(graph_to_json(g)) == g
    assert graph_from_edge_list(graph_to_edge_list(g)) == g
    assert parse_graph(graph_to_json(g)) == g
    assert parse_graph(graph_to_edge_list(g)) == g
    dot = graph_to_dot(g)
    assert '"a" -- "b"' in dot and '"lonely"' in dot


def test_edge_list_isolate_lines():
    text = "3 1\nv: c\na b\n"
    g = graph_from_edge_list(text)
    assert g == Graph(["a", "b", "c"], [("a", "b")])


def test_format_errors():
    with pytest.raises(FormatError):
        graph_from_edge_list("")
    with pytest.raises(FormatError):
        graph_from_edge_list("2 1\na b c\n")
    with pytest.raises(FormatError):
        graph_from_json("{\"nodes\": 3}")
    with pytest.raises(FormatError):
        parse_graph("")


@given(small_graphs())
@settings(max_examples=60)
def test_complement_involution(g):
    assert g.complement().complement() == g


@given(small_graphs())
@settings(max_examples=60)
def test_complement_edge_count(g):
    n = g.order
    assert g.size + g.complement().size == n * (n - 1) // 2


# --- enumeration and isomorphism --------------------------------------------


def test_enumeration_counts_small():
    assert [len(enumerate_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_enumeration_is_pairwise_nonisomorphic():
    reps = enumerate_graphs(4)
    for a, b in itertools.combinations(reps, 2):
        assert isomorphic(a, b) is None


def test_enumeration_covers_every_labeled_graph():
    reps = enumerate_graphs(3)
    for mask in range(8):
        g = graph_from_mask(3, mask)
        assert any(isomorphic(g, r) is not None for r in reps)


def test_isomorphic_mapping_is_valid():
    g = cycle_graph(4)
    h = g.relabel({"v1": "d", "v2": "a", "v3": "b", "v4": "c"})
    mapping = isomorphic(g, h)
    assert mapping is not None
    for u, v in itertools.combinations(g.vertices, 2):
        assert g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])


def test_isomorphic_distinguishes_regular_pairs():
    c6 = cycle_graph(6)
    two_triangles = cycle_graph(3).union(
        cycle_graph(3).relabel({"v1": "w1", "v2": "w2", "v3": "w3"})
    )
    # both 2-regular on six vertices
    assert isomorphic(c6, two_triangles) is None


def test_automorphism_counts():
    assert automorphism_count(cycle_graph(4)) == 8
    assert automorphism_count(complete_graph(4)) == 24
    assert automorphism_count(path_graph(3)) == 2
    assert automorphism_count(null_graph(3)) == 6


def test_distinct_labelings_count():
    for g in enumerate_graphs(4):
        labelings = list(distinct_labelings(g))
        assert len(labelings) == math.factorial(4) // automorphism_count(g)
        seen = {tuple(sorted(h.edges)) for h, _ in labelings}
        assert len(seen) == len(labelings)


# --- recognition oracles ----------------------------------------------------


def _has_induced(g, pattern):
    for sub in itertools.combinations(g.vertices, pattern.order):
        if isomorphic(g.induced(sub), pattern) is not None:
            return True
    return False


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_forbidden_subgraph_characterizations(n):
    p3, p4 = path_graph(3), path_graph(4)
    co_p3 = Graph("abc", [("a", "b")])  # one edge plus an isolate
    two_k2 = Graph("abcd", [("a", "b"), ("c", "d")])
    for g in enumerate_graphs(n):
        assert oracles.is_cluster(g) == (not _has_induced(g, p3))
        assert oracles.is_cograph(g) == (not _has_induced(g, p4))
        assert oracles.is_complete_multipartite(g) == (not _has_induced(g, co_p3))
        if oracles.is_bipartite(g):
            assert oracles.is_bipartite_chain(g) == (not _has_induced(g, two_k2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_oracle_intersection_identities(n):
    for g in enumerate_graphs(n):
        gc = g.complement()
        assert oracles.is_split(g) == (
            oracles.is_chordal(g) and oracles.is_chordal(gc)
        )
        assert oracles.is_threshold(g) == (
            oracles.is_split(g) and oracles.is_cograph(g)
        )
        assert oracles.is_permutation(g) == (
            oracles.is_comparability(g) and oracles.is_cocomparability(g)
        )
        assert oracles.is_interval(g) == (
            oracles.is_chordal(g) and oracles.is_cocomparability(g)
        )
        assert oracles.is_cobipartite(g) == oracles.is_bipartite(gc)
        assert oracles.is_co_interval(g) == oracles.is_interval(gc)
        assert oracles.is_co_circle(g) == oracles.is_circle(gc)
        assert oracles.is_comparability(g) == oracles.is_cocomparability(gc)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_halfline_matches_chordal_cobipartite(n):
    # the halfline oracle covers graphs without isolated vertices
    for g in enumerate_graphs(n):
        if any(True for _ in g.isolated_vertices()):
            continue
        assert oracles.is_halfline(g) == (
            oracles.is_chordal(g) and oracles.is_cobipartite(g)
        )


def test_named_class_spot_cases():
    assert oracles.is_interval(path_graph(4))
    assert not oracles.is_interval(cycle_graph(4))
    assert oracles.is_circle(cycle_graph(4))
    assert not oracles.is_circle(cycle_graph(5).add_universal("hub"))
    assert oracles.is_comparability(cycle_graph(6))
    assert not oracles.is_comparability(cycle_graph(5))
    assert oracles.is_threshold(Graph("abc", [("a", "c"), ("b", "c")]))
    assert not oracles.is_threshold(path_graph(4))
    assert oracles.is_convex(complete_bipartite(2, 3))
    assert oracles.is_interval_bigraph(path_graph(5))


def test_recognize_dispatch():
    assert oracles.recognize("interval", path_graph(3))
    with pytest.raises(ValueError):
        oracles.recognize("no-such-class", path_graph(3))


# --- width measures ---------------------------------------------------------


def _ref_treewidth(g):
    """Minimum over all elimination orders of the maximum back-degree."""
    best = g.order - 1
    for perm in itertools.permutations(g.vertices):
        adj = {v: set(g.neighbors(v)) for v in g.vertices}
        width = 0
        for v in perm:
            nbrs = adj.pop(v)
            width = max(width, len(nbrs))
            if width >= best:
                break
            for a in nbrs:
                adj[a].discard(v)
                adj[a].update(nbrs - {a})
        best = min(best, width)
    return best


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_treewidth_against_elimination_reference(n):
    for g in enumerate_graphs(n):
        assert oracles.treewidth_exact(g) == _ref_treewidth(g)


def test_treewidth_known_values():
    assert oracles.treewidth_exact(complete_graph(5)) == 4
    assert oracles.treewidth_exact(path_graph(5)) == 1
    assert oracles.treewidth_exact(cycle_graph(5)) == 2
    assert oracles.treewidth_exact(complete_bipartite(3, 3)) == 3
    assert oracles.treewidth_exact(null_graph(3)) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_degeneracy_bounded_by_treewidth(n):
    for g in enumerate_graphs(n):
        assert oracles.degeneracy(g) <= oracles.treewidth_exact(g)


def test_degeneracy_known_values():
    assert oracles.degeneracy(complete_graph(4)) == 3
    assert oracles.degeneracy(path_graph(5)) == 1
    assert oracles.degeneracy(cycle_graph(6)) == 2
    assert oracles.degeneracy(complete_bipartite(2, 5)) == 2
