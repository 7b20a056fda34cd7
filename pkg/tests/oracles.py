"""Slow reference implementations that share no code with the package.

Graphs are given as ``(n, edges)`` with plain Python sets; nothing here uses
bitmasks, memo tables or the package's state classes.
"""

from __future__ import annotations

import itertools


def neighbours(n, edges):
    nb = {v: set() for v in range(n)}
    for u, v in edges:
        nb[u].add(v)
        nb[v].add(u)
    return nb


def game_value(n, edges, dominated=frozenset(), dominator=True):
    """Plain game-tree minimax without memoisation (keep n small)."""
    nb = neighbours(n, edges)
    closed = {v: nb[v] | {v} for v in range(n)}
    everything = set(range(n))

    def rec(dom, dmove):
        if dom == everything:
            return 0
        vals = [1 + rec(dom | closed[v], not dmove) for v in range(n) if closed[v] - dom]
        return min(vals) if dmove else max(vals)

    return rec(set(dominated), dominator)


def edge_game_value(n, edges, dominator=True):
    """Edge game by direct minimax over dominated edge sets."""
    edges = [tuple(sorted(e)) for e in edges]
    everything = set(range(len(edges)))
    nbhd = {i: {j for j, f in enumerate(edges) if set(e) & set(f)} for i, e in enumerate(edges)}

    def rec(dom, dmove):
        if dom == everything:
            return 0
        vals = [1 + rec(dom | nbhd[i], not dmove) for i in nbhd if nbhd[i] - dom]
        return min(vals) if dmove else max(vals)

    return rec(set(), dominator)


def claw_free(n, edges):
    nb = neighbours(n, edges)
    for v in range(n):
        for a, b, c in itertools.combinations(sorted(nb[v]), 3):
            if b not in nb[a] and c not in nb[a] and c not in nb[b]:
                return False
    return True


def hamiltonian(n, edges, cycle):
    if n == 0:
        return False
    if cycle and n < 3:
        return False
    nb = neighbours(n, edges)
    for perm in itertools.permutations(range(n)):
        if cycle and perm[0] != 0:
            break
        if all(perm[i + 1] in nb[perm[i]] for i in range(n - 1)):
            if not cycle or perm[0] in nb[perm[-1]]:
                return True
    return False


def dominating_trail_exists(n, edges, closed):
    """Some connected edge subset with the right parity pattern covers every edge."""
    edges = [tuple(sorted(e)) for e in edges]
    for r in range(1, len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            cover = {x for e in sub for x in e}
            if not all(u in cover or v in cover for u, v in edges):
                continue
            deg = {}
            for u, v in sub:
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            odd = sum(1 for d in deg.values() if d % 2)
            if (closed and odd == 0) or (not closed and odd in (0, 2)):
                # connectivity of the chosen edges
                seen, stack = set(), [sub[0][0]]
                while stack:
                    x = stack.pop()
                    if x in seen:
                        continue
                    seen.add(x)
                    stack += [b if a == x else a for a, b in sub if x in (a, b)]
                if seen == set(deg):
                    if closed and r < 3:
                        continue
                    return True
    return False


def isomorphism_classes(n):
    """Number of graphs on ``n`` vertices up to isomorphism, by permutation dedup."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    seen = set()
    classes = 0
    for mask in range(1 << len(pairs)):
        es = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if mask in seen:
            continue
        classes += 1
        for p in perms:
            img = 0
            for u, v in es:
                a, b = sorted((p[u], p[v]))
                img |= 1 << pairs.index((a, b))
            seen.add(img)
    return classes
