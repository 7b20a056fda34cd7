from __future__ import annotations

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import DATA
from domgame.graph import (
    Graph,
    bits,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diamond_graph,
    disjoint_union,
    is_connected,
    line_graph,
    min_degree,
    path_graph,
    petersen_graph,
    prism_graph,
    star_graph,
)
from domgame.graph6 import read_graph6_file
from domgame.recognizers import (
    UNKNOWN,
    Pattern,
    Trail,
    find_edge_dominating_circuit,
    find_edge_dominating_trail,
    forbidden_subgraph_free,
    is_claw_free,
    is_cubic,
    is_hamiltonian,
    is_traceable,
)


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def connected_small(max_m):
    for g in read_graph6_file(DATA / "connected_m12.g6.gz"):
        if g.m <= max_m:
            yield g


class TestPredicates:
    def test_claw_free_examples(self):
        assert not is_claw_free(star_graph(3))
        assert all(is_claw_free(cycle_graph(n)) for n in range(3, 10))
        assert not is_claw_free(petersen_graph())

    @given(small_graphs())
    @settings(max_examples=100)
    def test_claw_free_matches_oracle(self, g):
        assert is_claw_free(g) == oracles.claw_free(g.n, g.edges)

    def test_cubic_and_min_degree(self):
        assert is_cubic(complete_graph(4)) and min_degree(complete_graph(4)) == 3
        assert not is_cubic(cycle_graph(5)) and min_degree(cycle_graph(5)) == 2
        assert min_degree(path_graph(3)) == 1

    def test_forbidden_patterns(self):
        assert not forbidden_subgraph_free(complete_graph(4), Pattern.K4)
        assert forbidden_subgraph_free(cycle_graph(6), Pattern.C6PLUS)
        assert not forbidden_subgraph_free(prism_graph(), Pattern.C6PLUS)
        assert not forbidden_subgraph_free(diamond_graph(), "Diamond")
        # K4 contains diamonds but none of them is induced
        assert forbidden_subgraph_free(complete_graph(4), Pattern.DIAMOND)

    def test_hamiltonicity_examples(self):
        assert is_traceable(cycle_graph(9)) and is_hamiltonian(cycle_graph(9))
        assert not is_traceable(star_graph(3))
        assert is_traceable(petersen_graph()) and not is_hamiltonian(petersen_graph())

    @given(small_graphs())
    @settings(max_examples=80)
    def test_hamiltonicity_matches_oracle(self, g):
        assert is_traceable(g) == oracles.hamiltonian(g.n, g.edges, cycle=False)
        assert is_hamiltonian(g) == oracles.hamiltonian(g.n, g.edges, cycle=True)


class TestTrailFinders:
    def test_circuit_examples(self):
        c7 = cycle_graph(7)
        t = find_edge_dominating_circuit(c7)
        assert t.closed and t.edge_set == c7.all_edges
        t = find_edge_dominating_circuit(complete_graph(4))
        assert t.length == 3 and t.is_dominating_in(complete_graph(4))
        assert find_edge_dominating_circuit(star_graph(3)) is None

    def test_trail_examples(self):
        p4 = path_graph(4)
        t = find_edge_dominating_trail(p4)
        assert t.vertices == (1, 2)
        t = find_edge_dominating_trail(star_graph(3))
        assert t is not None and 0 in t.vertices and t.length == 1
        two = disjoint_union(complete_graph(3), complete_graph(3))
        assert find_edge_dominating_trail(two) is None

    def test_unknown_above_cap(self):
        big = complete_graph(10)
        assert find_edge_dominating_circuit(big) is UNKNOWN

    @given(small_graphs(max_n=6))
    @settings(max_examples=60)
    def test_existence_matches_oracle(self, g):
        if g.m > 9:
            return
        c = find_edge_dominating_circuit(g)
        t = find_edge_dominating_trail(g)
        assert (c is not None) == oracles.dominating_trail_exists(g.n, g.edges, closed=True)
        assert (t is not None) == oracles.dominating_trail_exists(g.n, g.edges, closed=False)
        for found, closed in ((c, True), (t, None)):
            if found is not None:
                assert found.is_valid_in(g) and found.is_dominating_in(g)
                if closed:
                    assert found.closed

    def test_open_only(self):
        t = find_edge_dominating_trail(cycle_graph(5), open_only=True)
        assert t is not None and not t.closed and t.is_dominating_in(cycle_graph(5))

    def test_trail_validity(self):
        g = path_graph(3)
        assert Trail((0, 1, 2), (0, 1), False).is_valid_in(g)
        assert not Trail((0, 2), (0,), False).is_valid_in(g)
        assert not Trail((0, 1, 0), (0, 0), True).is_valid_in(g)


def test_every_edge_sees_two_circuit_edges():
    for g in connected_small(10):
        c = find_edge_dominating_circuit(g)
        if c is None:
            continue
        for e in range(g.m):
            near = g.edge_closed_neighborhood(e) & c.edge_set & ~(1 << e)
            assert near.bit_count() >= 2, (g, e)


def test_hamiltonian_line_graph_gives_circuit():
    # stars are the classical exception: L(K_{1,k}) = K_k is Hamiltonian, a tree has no circuit
    stars = 0
    for g in connected_small(9):
        if g.m >= 3 and is_hamiltonian(line_graph(g).graph):
            if max(g.degrees()) == g.m:
                stars += 1
                assert find_edge_dominating_circuit(g) is None
            else:
                assert find_edge_dominating_circuit(g) is not None, g
    assert stars == 7  # K_{1,3} .. K_{1,9}


def _triangles_at(g: Graph, v: int) -> list[frozenset]:
    return [
        frozenset((v, a, b))
        for a, b in itertools.combinations(bits(g.adj[v]), 2)
        if g.has_edge(a, b)
    ]


def test_claw_free_cubic_trichotomy():
    from domgame.transforms import inflate

    corpus = [
        g
        for n in (4, 6, 8, 10, 12, 14)
        for g in read_graph6_file(DATA / f"cubic_connected_n{n}.g6")
        if is_claw_free(g)
    ]
    corpus += [inflate(f)[0] for f in (complete_graph(4), complete_bipartite(3, 3), petersen_graph())]
    assert len(corpus) >= 13
    for g in corpus:
        assert is_connected(g) and is_cubic(g) and is_claw_free(g)
        for v in range(g.n):
            tris = _triangles_at(g, v)
            in_k4 = g.n == 4
            # a diamond centre lies on two triangles sharing an edge
            diamond_centre = any(len(a & b) == 2 for a, b in itertools.combinations(tris, 2))
            flat = [w for w in bits(g.adj[v]) if not any(w in t for t in tris)]
            one_of_each = len(tris) == 1 and len(flat) == 1
            assert in_k4 or diamond_centre or one_of_each, (g, v)
