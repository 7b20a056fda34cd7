"""Graph-class predicates and structure finders."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .graph import EdgeSet, Graph, bits, component_of, is_connected, min_degree

__all__ = [
    "Pattern",
    "Trail",
    "UNKNOWN",
    "Unknown",
    "find_edge_dominating_circuit",
    "find_edge_dominating_trail",
    "forbidden_subgraph_free",
    "is_claw_free",
    "is_cubic",
    "is_hamiltonian",
    "is_traceable",
    "min_degree",
]

SUBSET_SEARCH_EDGE_CAP = 24


class Unknown(enum.Enum):
    """Third outcome of a bounded search that gave up."""

    UNKNOWN = "unknown"

    def __bool__(self) -> bool:
        raise TypeError("an UNKNOWN search outcome has no truth value")


UNKNOWN = Unknown.UNKNOWN


class Pattern(str, enum.Enum):
    K4 = "K4"
    DIAMOND = "Diamond"
    C6PLUS = "C6plus"


@dataclass(frozen=True)
class Trail:
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]
    closed: bool

    @property
    def length(self) -> int:
        return len(self.edge_indices)

    @property
    def vertex_set(self) -> int:
        out = 0
        for v in self.vertices:
            out |= 1 << v
        return out

    @property
    def edge_set(self) -> EdgeSet:
        out = 0
        for e in self.edge_indices:
            out |= 1 << e
        return out

    def is_valid_in(self, g: Graph) -> bool:
        if len(self.vertices) != len(self.edge_indices) + 1 or not self.edge_indices:
            return False
        if len(set(self.edge_indices)) != len(self.edge_indices):
            return False
        for i, e in enumerate(self.edge_indices):
            a, b = self.vertices[i], self.vertices[i + 1]
            if not g.has_edge(a, b) or g.edge_index(a, b) != e:
                return False
        return (self.vertices[0] == self.vertices[-1]) == self.closed

    def is_dominating_in(self, g: Graph) -> bool:
        """Vertex set of the trail is a vertex cover of ``g``."""
        cover = self.vertex_set
        return all(cover >> u & 1 or cover >> v & 1 for u, v in g.edges)


def is_claw_free(g: Graph) -> bool:
    """No vertex has three pairwise nonadjacent neighbours."""
    for v in range(g.n):
        nb = list(bits(g.adj[v]))
        if len(nb) < 3:
            continue
        for a, b, c in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def is_cubic(g: Graph) -> bool:
    return all(d == 3 for d in g.degrees())


def _has_induced_k4(g: Graph) -> bool:
    for u, v in g.edges:
        common = g.adj[u] & g.adj[v]
        for a in bits(common):
            if g.adj[a] & common:
                return True
    return False


def _has_induced_diamond(g: Graph) -> bool:
    # central pair uv with two nonadjacent common neighbours
    for u, v in g.edges:
        common = list(bits(g.adj[u] & g.adj[v]))
        for a, b in combinations(common, 2):
            if not g.has_edge(a, b):
                return True
    return False


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.edges:
        for w in bits(g.adj[u] & g.adj[v]):
            if w > v:
                out.append((u, v, w))
    return out


def _has_c6plus(g: Graph) -> bool:
    # two vertex-disjoint triangles joined by two vertex-disjoint edges
    tris = _triangles(g)
    for s, t in combinations(tris, 2):
        if set(s) & set(t):
            continue
        links = [(a, b) for a in s for b in t if g.has_edge(a, b)]
        for (a1, b1), (a2, b2) in combinations(links, 2):
            if a1 != a2 and b1 != b2:
                return True
    return False


def forbidden_subgraph_free(g: Graph, pattern: Pattern | str) -> bool:
    """K4 and diamond are tested as induced subgraphs, C6+ as a subgraph."""
    pattern = Pattern(pattern)
    if pattern is Pattern.K4:
        return not _has_induced_k4(g)
    if pattern is Pattern.DIAMOND:
        return not _has_induced_diamond(g)
    return not _has_c6plus(g)


# -- Hamiltonian paths and cycles ---------------------------------------------


def _hamiltonian_search(g: Graph, cycle: bool) -> bool:
    n = g.n
    full = g.all_vertices
    if n == 1:
        return not cycle
    if not is_connected(g):
        return False
    if cycle and (n < 3 or min_degree(g) < 2):
        return False
    degree_one = [v for v in range(n) if g.degree(v) <= 1]
    if not cycle and len(degree_one) > 2:
        return False
    adj = g.adj

    def feasible(visited: int, end: int, start: int) -> bool:
        rest = full & ~visited
        if not rest:
            return True
        # the unvisited part plus the current end must stay connected
        if component_of(g, end, rest | (1 << end)) != rest | (1 << end):
            return False
        anchors = (1 << end) | ((1 << start) if cycle else 0)
        loose = 0
        for v in bits(rest):
            avail = (adj[v] & (rest | anchors)).bit_count()
            if avail == 0:
                return False
            if avail == 1:
                loose += 1
        # a path can leave at most one dangling vertex at its far end
        return loose <= (0 if cycle else 1)

    def extend(end: int, visited: int, start: int) -> bool:
        if visited == full:
            return not cycle or bool(adj[end] >> start & 1)
        if not feasible(visited, end, start):
            return False
        for w in bits(adj[end] & ~visited):
            if extend(w, visited | (1 << w), start):
                return True
        return False

    if cycle:
        return extend(0, 1, 0)
    starts = degree_one if degree_one else range(n)
    for s in starts:
        if extend(s, 1 << s, s):
            return True
    return False


def is_traceable(g: Graph) -> bool:
    """``g`` has a Hamiltonian path (``K_1`` counts)."""
    if g.n == 0:
        return False
    return _hamiltonian_search(g, cycle=False)


def is_hamiltonian(g: Graph) -> bool:
    if g.n < 3:
        return False
    return _hamiltonian_search(g, cycle=True)


# -- edge dominating circuits and trails --------------------------------------


def _edge_set_connected(g: Graph, edge_set: int) -> bool:
    verts = g.vertices_of(edge_set)
    if not verts:
        return False
    start = (verts & -verts).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            for e in bits(g.incident_edges(v) & edge_set):
                a, b = g.edges[e]
                nxt |= (1 << a) | (1 << b)
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == verts


def _search_dominating_edge_set(g: Graph, odd_allowed: tuple[int, ...]) -> int | None:
    """Edge subset ``S`` whose indicator vector (edge 0 first) is lexicographically
    least among connected, vertex-covering subsets with an allowed number of
    odd-degree vertices.  Excluding an edge is tried before including it."""
    m = g.m
    if m == 0:
        return None
    max_odd = max(odd_allowed)
    last_edge = [-1] * g.n
    for i, (u, v) in enumerate(g.edges):
        last_edge[u] = i
        last_edge[v] = i
    adj = g.adj
    edges = g.edges

    def dfs(i: int, chosen: int, covered: int, out: int, parity: int, odd_done: int) -> int | None:
        # covered: vertices incident to a chosen edge; out: vertices that can never be covered
        if i == m:
            if not chosen:
                return None
            odd = odd_done
            if odd not in odd_allowed:
                return None
            return chosen if _edge_set_connected(g, chosen) else None
        u, v = edges[i]
        for include in (False, True):
            c_cov, c_out, c_par, c_odd = covered, out, parity, odd_done
            c_chosen = chosen
            if include:
                c_chosen |= 1 << i
                c_cov |= (1 << u) | (1 << v)
                c_par ^= (1 << u) | (1 << v)
            ok = True
            for x in (u, v):
                if last_edge[x] == i:
                    if not c_cov >> x & 1:
                        c_out |= 1 << x
                        if adj[x] & c_out:
                            ok = False
                            break
                    if c_par >> x & 1:
                        c_odd += 1
            if not ok or c_odd > max_odd:
                continue
            found = dfs(i + 1, c_chosen, c_cov, c_out, c_par, c_odd)
            if found is not None:
                return found
        return None

    return dfs(0, 0, 0, 0, 0, 0)


def _hierholzer(g: Graph, edge_set: int, start: int) -> tuple[list[int], list[int]]:
    """Euler trail of the edge-induced subgraph from ``start``, lowest edge index first."""
    remaining = edge_set
    stack: list[tuple[int, int]] = [(start, -1)]
    out_v: list[int] = []
    out_e: list[int] = []
    while stack:
        v, via = stack[-1]
        avail = g.incident_edges(v) & remaining
        if avail:
            e = (avail & -avail).bit_length() - 1
            remaining &= ~(1 << e)
            a, b = g.edges[e]
            stack.append((b if a == v else a, e))
        else:
            stack.pop()
            out_v.append(v)
            if via >= 0:
                out_e.append(via)
    out_v.reverse()
    out_e.reverse()
    return out_v, out_e


def _trail_from_edge_set(g: Graph, edge_set: int) -> Trail:
    deg: dict[int, int] = {}
    for e in bits(edge_set):
        for x in g.edges[e]:
            deg[x] = deg.get(x, 0) + 1
    odd = sorted(x for x, d in deg.items() if d % 2)
    start = odd[0] if odd else min(deg)
    verts, eids = _hierholzer(g, edge_set, start)
    return Trail(tuple(verts), tuple(eids), closed=not odd)


def find_edge_dominating_circuit(g: Graph) -> Trail | None | Unknown:
    """A closed trail whose vertices cover every edge, ``None`` if there is none.

    Returns :data:`UNKNOWN` when ``m`` exceeds the subset-search cap.
    """
    if g.m > SUBSET_SEARCH_EDGE_CAP:
        return UNKNOWN
    found = _search_dominating_edge_set(g, (0,))
    if found is None:
        return None
    trail = _trail_from_edge_set(g, found)
    return trail if trail.length >= 3 else None


def find_edge_dominating_trail(g: Graph, *, open_only: bool = False) -> Trail | None | Unknown:
    """A trail (open, or closed unless ``open_only``) whose vertices cover every edge."""
    if g.m > SUBSET_SEARCH_EDGE_CAP:
        return UNKNOWN
    found = _search_dominating_edge_set(g, (2,) if open_only else (0, 2))
    if found is None:
        return None
    return _trail_from_edge_set(g, found)
