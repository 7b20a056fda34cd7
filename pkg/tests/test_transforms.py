from __future__ import annotations

import pytest

from conftest import DATA
from domgame.graph import Graph, complete_bipartite, complete_graph, cycle_graph, petersen_graph, prism_graph
from domgame.graph6 import read_graph6_file
from domgame.iso import are_isomorphic
from domgame.recognizers import UNKNOWN, Pattern, forbidden_subgraph_free, is_claw_free, is_cubic
from domgame.transforms import TransformError, check_hamiltonicity_transfer, contract_triangles, inflate

CUBIC_UP_TO_10 = [
    g for n in (4, 6, 8, 10) for g in read_graph6_file(DATA / f"cubic_connected_n{n}.g6")
]


def _good_inflation(g: Graph) -> bool:
    return (
        is_claw_free(g)
        and is_cubic(g)
        and all(forbidden_subgraph_free(g, p) for p in Pattern)
    )


def test_inflate_examples():
    g, tmap = inflate(complete_graph(4))
    assert g.n == 12 and _good_inflation(g)
    assert tmap.triangles[1] == (3, 4, 5)
    g, _ = inflate(complete_bipartite(3, 3))
    assert g.n == 18 and _good_inflation(g)


def test_inflate_rejects_non_cubic():
    with pytest.raises(TransformError):
        inflate(cycle_graph(4))


def test_triangle_map_invariants():
    g, tmap = inflate(petersen_graph())
    owner = tmap.owner()
    assert sorted(owner) == list(range(g.n))
    ends = [x for link in tmap.links.values() for x in link]
    assert sorted(ends) == list(range(g.n))  # one connecting edge per vertex
    for (u, v), (a, b) in tmap.links.items():
        assert g.has_edge(a, b) and owner[a] == u and owner[b] == v


def test_contract_examples():
    for f in (complete_graph(4), petersen_graph()):
        back, _ = contract_triangles(inflate(f)[0])
        assert are_isomorphic(back, f)
    with pytest.raises(TransformError, match="C6plus"):
        contract_triangles(prism_graph())
    with pytest.raises(TransformError):
        contract_triangles(cycle_graph(6))


def test_round_trip_all_small_cubic():
    assert len(CUBIC_UP_TO_10) == 27
    for f in CUBIC_UP_TO_10:
        g, _ = inflate(f)
        assert _good_inflation(g)
        assert are_isomorphic(contract_triangles(g)[0], f)


def test_hamiltonicity_transfer():
    assert check_hamiltonicity_transfer(complete_graph(4)) is True
    assert check_hamiltonicity_transfer(complete_bipartite(3, 3)) is True
    assert check_hamiltonicity_transfer(petersen_graph()) is True
    for f in CUBIC_UP_TO_10:
        assert check_hamiltonicity_transfer(f) is True


def test_hamiltonicity_transfer_budget():
    big = next(iter(read_graph6_file(DATA / "cubic_connected_n14.g6")))
    assert check_hamiltonicity_transfer(big) is UNKNOWN
