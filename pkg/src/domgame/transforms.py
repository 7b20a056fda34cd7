"""Triangle inflation of cubic graphs and its inverse.

Every vertex ``u`` of a cubic graph ``F`` becomes the triangle
``t(u) = (3u, 3u+1, 3u+2)`` and every edge of ``F`` becomes one edge between
the matching triangles.  Slot ``i`` of ``t(u)`` carries the edge to the
``i``-th smallest neighbour of ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, bits
from .recognizers import (
    UNKNOWN,
    Pattern,
    Unknown,
    forbidden_subgraph_free,
    is_claw_free,
    is_cubic,
    is_hamiltonian,
)

HAMILTONICITY_TRANSFER_CAP = 12


class TransformError(GraphError):
    pass


@dataclass(frozen=True)
class TriangleMap:
    """``triangles[u]`` is ``t(u)``; ``links[(u, v)]`` is the connecting edge of ``uv``."""

    triangles: tuple[tuple[int, int, int], ...]
    links: dict[tuple[int, int], tuple[int, int]]

    def owner(self) -> dict[int, int]:
        return {x: u for u, tri in enumerate(self.triangles) for x in tri}


def inflate(f: Graph) -> tuple[Graph, TriangleMap]:
    if not is_cubic(f):
        raise TransformError("inflation needs a cubic graph")
    triangles = tuple((3 * u, 3 * u + 1, 3 * u + 2) for u in range(f.n))
    edges = []
    for a, b, c in triangles:
        edges += [(a, b), (a, c), (b, c)]
    slot = {(u, w): 3 * u + i for u in range(f.n) for i, w in enumerate(bits(f.adj[u]))}
    links = {}
    for u, v in f.edges:
        link = (slot[(u, v)], slot[(v, u)])
        edges.append(link)
        links[(u, v)] = link
    return Graph.from_edges(3 * f.n, edges, cap=max(64, 3 * f.n)), TriangleMap(triangles, links)


def contract_triangles(g: Graph) -> tuple[Graph, TriangleMap]:
    """Contract every triangle of a claw-free cubic (K4, diamond, C6+)-free graph."""
    if not is_cubic(g):
        raise TransformError("contraction needs a cubic graph")
    if not is_claw_free(g):
        raise TransformError("contraction needs a claw-free graph")
    for pattern in Pattern:
        if not forbidden_subgraph_free(g, pattern):
            raise TransformError(f"graph contains {pattern.value}")
    owner: dict[int, int] = {}
    triangles: list[tuple[int, int, int]] = []
    for v in range(g.n):
        if v in owner:
            continue
        tri = None
        for w in bits(g.adj[v]):
            common = g.adj[v] & g.adj[w]
            if common:
                x = (common & -common).bit_length() - 1
                tri = tuple(sorted((v, w, x)))
                break
        if tri is None:
            raise TransformError(f"vertex {v} lies in no triangle")
        for x in tri:
            if x in owner:
                raise TransformError(f"triangles through vertex {x} overlap")
            owner[x] = len(triangles)
        triangles.append(tri)
    edges = []
    links: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b in g.edges:
        u, v = owner[a], owner[b]
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        if key in links:
            raise TransformError(f"triangles {key} are joined by two edges")
        links[key] = (a, b) if u < v else (b, a)
        edges.append(key)
    return Graph.from_edges(len(triangles), edges, cap=max(64, len(triangles))), TriangleMap(
        tuple(triangles), links
    )


def check_hamiltonicity_transfer(f: Graph) -> bool | Unknown:
    """Whether ``f`` and its inflation agree on being Hamiltonian."""
    if not is_cubic(f):
        raise TransformError("Hamiltonicity transfer needs a cubic graph")
    if f.n > HAMILTONICITY_TRANSFER_CAP:
        return UNKNOWN
    g, _ = inflate(f)
    return is_hamiltonian(f) == is_hamiltonian(g)
