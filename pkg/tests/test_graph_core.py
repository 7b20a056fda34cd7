from __future__ import annotations

import gzip
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domgame.graph import (
    Graph,
    GraphError,
    VertexCapError,
    closed_neighborhood,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    empty_graph,
    is_connected,
    is_cycle_up_to_isolates,
    line_graph,
    path_graph,
    star_graph,
)
from domgame.graph6 import (
    Graph6Error,
    Graph6LengthError,
    Graph6PaddingError,
    encode_graph6,
    iter_graph6_lines,
    parse_graph6,
    read_graph6_file,
)
from domgame.iso import are_isomorphic, canonical_form


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestGraph6:
    def test_hand_encoded_examples(self):
        assert parse_graph6("A_").edges == ((0, 1),)
        assert parse_graph6("A?").n == 2 and parse_graph6("A?").m == 0
        assert parse_graph6("Bw") == complete_graph(3)

    def test_encode_examples(self):
        assert encode_graph6(complete_graph(2)) == "A_"
        assert encode_graph6(complete_graph(3)) == "Bw"
        assert encode_graph6(empty_graph(1)) == "@"

    def test_header_and_whitespace(self):
        assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)

    def test_distinct_errors(self):
        with pytest.raises(Graph6LengthError):
            parse_graph6("Bww")
        with pytest.raises(Graph6PaddingError):
            parse_graph6("Bx")
        with pytest.raises(VertexCapError):
            parse_graph6(encode_graph6(Graph.from_edges(70, [], cap=70)))
        with pytest.raises(Graph6Error):
            parse_graph6("B w")
        with pytest.raises(Graph6LengthError):
            parse_graph6("")

    def test_large_order_field(self):
        g = path_graph(64)
        text = encode_graph6(g)
        assert text.startswith("~")
        assert parse_graph6(text) == g

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_graph6(encode_graph6(g)) == g

    @given(graphs())
    @settings(max_examples=60)
    def test_agrees_with_networkx(self, g):
        ref = nx.to_graph6_bytes(to_nx(g), header=False).strip().decode()
        assert encode_graph6(g) == ref

    def test_file_reading(self, tmp_path):
        p = tmp_path / "g.g6"
        p.write_text(">>graph6<<A_\n\nBw\n")
        assert [r for _, r in iter_graph6_lines(p)] == ["A_", "Bw"]
        z = tmp_path / "g.g6.gz"
        with gzip.open(z, "wt") as fh:
            fh.write("A_\nBw\n")
        assert [g.m for g in read_graph6_file(z)] == [1, 3]


class TestGraph:
    def test_rejects_loops_and_range(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 0)])
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])
        with pytest.raises(VertexCapError):
            Graph.from_edges(65, [])

    def test_edges_sorted_and_deduplicated(self):
        g = Graph.from_edges(3, [(2, 1), (0, 1), (1, 2)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.edge_index(2, 1) == 1

    def test_closed_neighbourhood(self):
        assert closed_neighborhood(complete_graph(3), 0) == 0b111
        assert closed_neighborhood(path_graph(3), 0) == 0b011
        assert closed_neighborhood(empty_graph(4), 2) == 0b100

    def test_line_graph_examples(self):
        assert are_isomorphic(line_graph(path_graph(4)).graph, path_graph(3))
        assert are_isomorphic(line_graph(cycle_graph(5)).graph, cycle_graph(5))
        assert are_isomorphic(line_graph(star_graph(3)).graph, complete_graph(3))
        with pytest.raises(GraphError):
            line_graph(empty_graph(3))

    @given(graphs(max_n=7))
    @settings(max_examples=60)
    def test_line_graph_matches_networkx(self, g):
        if g.m == 0:
            return
        lg = line_graph(g)
        ref = nx.line_graph(to_nx(g))
        expect = {tuple(sorted((lg.root_edges.index(a), lg.root_edges.index(b)))) for a, b in ref.edges}
        assert set(lg.graph.edges) == expect

    def test_diameter_and_connectivity(self):
        assert diameter(cycle_graph(9)) == 4
        assert diameter(complete_graph(4)) == 1
        two = disjoint_union(complete_graph(2), complete_graph(2))
        assert diameter(two) == math.inf
        assert not is_connected(two)
        assert is_connected(cycle_graph(5)) and is_connected(empty_graph(1))

    @given(graphs(max_n=8))
    @settings(max_examples=60)
    def test_diameter_matches_networkx(self, g):
        if g.n == 0:
            return
        h = to_nx(g)
        expect = nx.diameter(h) if nx.is_connected(h) else math.inf
        assert diameter(g) == expect

    def test_cycle_up_to_isolates(self):
        assert is_cycle_up_to_isolates(disjoint_union(cycle_graph(4), empty_graph(2)))
        assert not is_cycle_up_to_isolates(disjoint_union(cycle_graph(3), cycle_graph(3)))
        assert not is_cycle_up_to_isolates(path_graph(4))


class TestIsomorphism:
    @given(graphs(max_n=8), st.randoms(use_true_random=False))
    @settings(max_examples=80)
    def test_canonical_form_is_invariant(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(g) == canonical_form(h)
        assert are_isomorphic(g, h)

    @given(graphs(max_n=6), graphs(max_n=6))
    @settings(max_examples=80)
    def test_agrees_with_networkx(self, g, h):
        assert are_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
        assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))

    def test_bipartite_vs_prism(self):
        from domgame.graph import prism_graph

        assert not are_isomorphic(complete_bipartite(3, 3), prism_graph())
