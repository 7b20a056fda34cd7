"""Isomorph-free generation of all graphs on at most seven vertices."""

from __future__ import annotations

from typing import Iterator

from ..graph import Graph, bits
from ..iso import canonical_form

MAX_GENERATED_ORDER = 7


def _extend(g: Graph) -> Iterator[Graph]:
    """All one-vertex extensions: the new vertex ``n`` joins each subset of ``V(g)``."""
    n = g.n
    for subset in range(1 << n):
        yield Graph.from_edges(n + 1, list(g.edges) + [(v, n) for v in bits(subset)])


def generate_all_graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices, in canonical form.

    Every graph on ``k+1`` vertices arises from one on ``k`` vertices by adding
    a vertex, so level-by-level extension followed by canonical-form
    deduplication is exhaustive.  Output is ordered by edge count, then by the
    canonical adjacency string.
    """
    if not 0 <= n <= MAX_GENERATED_ORDER:
        raise ValueError(f"built-in generation supports 0 <= n <= {MAX_GENERATED_ORDER}")
    level: dict[tuple, Graph] = {canonical_form(Graph.from_edges(0, [])): Graph.from_edges(0, [])}
    for _ in range(n):
        nxt: dict[tuple, Graph] = {}
        for g in level.values():
            for h in _extend(g):
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = h
        level = nxt
    for key in sorted(level, key=lambda k: (level[k].m, k)):
        yield _from_form(key)


def _from_form(key: tuple) -> Graph:
    n, cols = key
    edges = [(q, p) for p in range(n) for q in range(p) if cols[p][q]]
    return Graph.from_edges(n, edges)
