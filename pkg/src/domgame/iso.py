"""Brute-force canonical forms and isomorphism tests for desk-scale graphs.

The canonical form is the lexicographically least graph6 bit string over all
vertex orders that respect an isomorphism-invariant ordered partition (colour
refinement seeded by degree).  This is exact for every graph but exponential
on highly regular ones, which is fine for ``n <= 12``.
"""

from __future__ import annotations

from .graph import Graph, bits


def refine(g: Graph) -> list[list[int]]:
    """Ordered colour-refinement partition of ``V(g)``."""
    colour = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [
            (colour[v], tuple(sorted(colour[w] for w in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if len(palette) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order ``order[p] = v`` giving the least adjacency string."""
    n = g.n
    if n <= 1:
        return list(range(n))
    cell_of_position = []
    for cell in refine(g):
        cell_of_position.extend([cell] * len(cell))
    # twins[v]: vertices w with N(v) - w == N(w) - v; swapping twins is an automorphism
    twins = [0] * n
    for v in range(n):
        for w in range(n):
            if w != v and g.adj[v] & ~(1 << w) == g.adj[w] & ~(1 << v):
                twins[v] |= 1 << w
    best: list[tuple[int, ...]] = []
    best_order: list[int] = []
    order: list[int] = []
    used = 0
    # columns[p] is the bit column for position p: adjacency of order[p] to order[0..p-1]
    columns: list[tuple[int, ...]] = []

    def search(p: int) -> None:
        nonlocal best, best_order, used
        if p == n:
            if not best or columns < best:
                best = list(columns)
                best_order = list(order)
            return
        for v in cell_of_position[p]:
            if used >> v & 1:
                continue
            if twins[v] & ~used & ((1 << v) - 1):
                continue  # an unused smaller twin gives the same strings
            col = tuple(g.adj[v] >> u & 1 for u in order)
            if best and columns + [col] > best[: p + 1]:
                continue
            order.append(v)
            columns.append(col)
            used |= 1 << v
            search(p + 1)
            used &= ~(1 << v)
            columns.pop()
            order.pop()

    search(0)
    return best_order


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, ...], ...]]:
    order = canonical_labeling(g)
    cols = tuple(tuple(g.adj[order[p]] >> order[q] & 1 for q in range(p)) for p in range(g.n))
    return g.n, cols


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return g.relabel(perm)


def _triangle_counts(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        nb = g.adj[v]
        out.append(sum((g.adj[u] & nb).bit_count() for u in bits(nb)) // 2)
    return out


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``uv in E(g) <=> phi[u]phi[v] in E(h)``, or ``None``.

    Backtracking over vertex images, pruned by degree and triangle count.
    """
    if g.n != h.n or g.m != h.m:
        return None
    n = g.n
    inv_g = list(zip(g.degrees(), _triangle_counts(g)))
    inv_h = list(zip(h.degrees(), _triangle_counts(h)))
    if sorted(inv_g) != sorted(inv_h):
        return None
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    # place neighbours of already-placed vertices early
    placed: list[int] = []
    seen = 0
    for v in order:
        if seen >> v & 1:
            continue
        stack = [v]
        while stack:
            x = stack.pop(0)
            if seen >> x & 1:
                continue
            seen |= 1 << x
            placed.append(x)
            stack.extend(sorted(bits(g.adj[x] & ~seen), key=lambda y: -g.degree(y)))
    phi = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = placed[i]
        for w in range(n):
            if used >> w & 1 or inv_h[w] != inv_g[v]:
                continue
            ok = True
            for u in placed[:i]:
                if g.has_edge(u, v) != h.has_edge(phi[u], w):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
