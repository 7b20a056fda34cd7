"""Simple undirected graphs on vertices ``0..n-1`` with bitmask adjacency.

Vertex sets and edge sets are plain Python ints used as bit vectors: bit ``i``
set means vertex (or edge index) ``i`` is a member.  Edges are indexed by
their position in the lexicographically sorted list of pairs ``(u, v)`` with
``u < v``; every other module refers to edges through that index.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

VertexSet = int
EdgeSet = int

DEFAULT_VERTEX_CAP = 64


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


class VertexCapError(GraphError):
    """Raised when a graph exceeds the configured vertex cap."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items: Iterable[int]) -> int:
    out = 0
    for i in items:
        out |= 1 << i
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bitmask and ``edges`` is
    the sorted tuple of pairs ``(u, v)``, ``u < v``.  Build instances with
    :meth:`from_edges` rather than calling the constructor directly.
    """

    n: int
    adj: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    _edge_index: dict = field(default=None, compare=False, repr=False, hash=False)
    _incidence: tuple = field(default=None, compare=False, repr=False, hash=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        *,
        cap: int = DEFAULT_VERTEX_CAP,
    ) -> Graph:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if n > cap:
            raise VertexCapError(f"graph has {n} vertices, cap is {cap}")
        adj = [0] * n
        pairs = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            a, b = (u, v) if u < v else (v, u)
            pairs.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj), tuple(sorted(pairs)))

    @classmethod
    def from_adjacency(cls, adj: Iterable[int], *, cap: int = DEFAULT_VERTEX_CAP) -> Graph:
        adj = list(adj)
        edges = [(u, v) for u in range(len(adj)) for v in bits(adj[u]) if u < v]
        return cls.from_edges(len(adj), edges, cap=cap)

    def __post_init__(self) -> None:
        index = {e: i for i, e in enumerate(self.edges)}
        incidence = [0] * self.n
        for i, (u, v) in enumerate(self.edges):
            incidence[u] |= 1 << i
            incidence[v] |= 1 << i
        object.__setattr__(self, "_edge_index", index)
        object.__setattr__(self, "_incidence", tuple(incidence))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def all_edges(self) -> EdgeSet:
        return (1 << self.m) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def closed(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge ``uv``; raises ``KeyError`` if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def incident_edges(self, v: int) -> EdgeSet:
        return self._incidence[v]

    def edge_closed_neighborhood(self, e: int) -> EdgeSet:
        """``N[e]``: edge ``e`` together with every edge sharing an endpoint."""
        u, v = self.edges[e]
        return self._incidence[u] | self._incidence[v]

    def vertices_of(self, edge_set: EdgeSet) -> VertexSet:
        out = 0
        for e in bits(edge_set):
            u, v = self.edges[e]
            out |= (1 << u) | (1 << v)
        return out

    def induced(self, vertices: VertexSet) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled ``0..k-1``; also returns the old labels."""
        labels = list(bits(vertices))
        pos = {v: i for i, v in enumerate(labels)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(labels), edges, cap=max(len(labels), 1)), labels

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(
            self.n, [(perm[u], perm[v]) for u, v in self.edges], cap=max(self.n, 1)
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


class LineGraph(NamedTuple):
    graph: Graph
    root_edges: tuple[tuple[int, int], ...]


def line_graph(g: Graph) -> LineGraph:
    """Line graph of ``g``; vertex ``i`` of the result stands for edge ``i`` of ``g``."""
    if g.m == 0:
        raise GraphError("line graph of an edgeless graph is empty")
    edges = []
    for i in range(g.m):
        for j in bits(g.edge_closed_neighborhood(i) >> (i + 1)):
            edges.append((i, i + 1 + j))
    return LineGraph(Graph.from_edges(g.m, edges, cap=max(g.m, DEFAULT_VERTEX_CAP)), g.edges)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return g.closed(v)


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u]):
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def component_of(g: Graph, v: int, within: VertexSet | None = None) -> VertexSet:
    """Vertex set of the component containing ``v`` in ``g[within]``."""
    allowed = g.all_vertices if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= g.adj[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``g[within]`` ordered by smallest vertex."""
    rest = g.all_vertices if within is None else within
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_of(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return component_of(g, 0) == g.all_vertices


def diameter(g: Graph) -> float:
    """Largest distance between two vertices; ``math.inf`` when disconnected."""
    if g.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    if not is_connected(g):
        return math.inf
    best = 0
    for v in range(g.n):
        best = max(best, max(bfs_distances(g, v)))
    return best


def min_degree(g: Graph) -> int:
    return min(g.degrees()) if g.n else 0


def is_cycle_graph(g: Graph) -> bool:
    """True when ``g`` is a single cycle ``C_n`` (n >= 3)."""
    return g.n >= 3 and all(d == 2 for d in g.degrees()) and is_connected(g)


def is_cycle_up_to_isolates(g: Graph) -> bool:
    """True when the non-isolated vertices of ``g`` induce a single cycle.

    Isolated vertices play no role in the edge game, so edge-game bounds that
    single out cycles use this test.
    """
    support = 0
    for v in range(g.n):
        if g.adj[v]:
            support |= 1 << v
    if not support:
        return False
    return is_cycle_graph(g.induced(support)[0])


# -- small named graphs -------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism_graph() -> Graph:
    """Triangular prism ``K_3 x K_2``."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def diamond_graph() -> Graph:
    """``K_4 - e`` with central vertices 0 and 1."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph.from_edges(offset, edges)
