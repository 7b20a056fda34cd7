"""Dominator policies driven by the potential-function case analyses.

* :class:`CubicPolicy` for claw-free cubic graphs (cases C1..C7),
* :class:`EdgeCircuitPolicy`, the greedy maximum-decrease edge strategy,
* :class:`ClawFree2Policy` for claw-free graphs with minimum degree 2
  (cases D1..D5 plus the all-cycles endgame, played exactly).

Witness choices are deterministic: among several candidate structures the one
with the lexicographically least sorted vertex tuple wins, and within it the
smallest index.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..edge_game import EdgeResidualState, edge_legal_moves
from ..game import GameOverError, GameSolver, Player, ResidualState
from ..graph import Graph, VertexSet, bits, components, min_degree
from ..recognizers import is_claw_free, is_cubic
from .potentials import (
    PhasedState,
    PotentialProfile,
    ProfileKind,
    max_white_degree,
    move_gain,
    white_degree,
)


class HypothesisError(ValueError):
    """The host graph does not satisfy the policy's hypothesis."""


@dataclass(frozen=True)
class WhiteComponent:
    """Component of ``G^D[W]`` when every white degree is at most 2.

    ``order`` walks the path from its smaller end, or the cycle from its
    smallest vertex towards its smaller neighbour.
    """

    vertices: tuple[int, ...]
    is_cycle: bool
    order: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


def white_components(g: Graph, white: VertexSet) -> list[WhiteComponent]:
    out = []
    for comp in components(g, white):
        verts = tuple(bits(comp))
        degs = {v: (g.adj[v] & comp).bit_count() for v in verts}
        if max(degs.values()) > 2:
            raise ValueError("white component has a vertex of white degree > 2")
        is_cycle = len(verts) >= 3 and all(d == 2 for d in degs.values())
        if is_cycle:
            start = verts[0]
        else:
            start = min(v for v in verts if degs[v] <= 1)
        order = [start]
        prev, cur = -1, start
        while True:
            nxt = [w for w in bits(g.adj[cur] & comp) if w != prev and w != start]
            if not nxt or len(order) == len(verts):
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        out.append(WhiteComponent(verts, is_cycle, tuple(order)))
    out.sort(key=lambda c: c.vertices)
    return out


# -- claw-free cubic ---------------------------------------------------------------


@dataclass(frozen=True)
class CubicCase:
    case: str
    witness: tuple[int, ...] = ()

    @property
    def move(self) -> int | None:
        w = self.witness
        if self.case in ("C1", "C7"):
            return w[0]
        if self.case == "C2":
            return min(w)
        if self.case in ("C3", "C6"):
            return w[1]
        if self.case == "C4":
            return min(w)
        if self.case == "C5":
            return min(w)
        return None


def k_subgraphs(g: Graph, s: ResidualState) -> list[tuple[int, int, int, int]]:
    """Diamonds whose two central vertices are white and the other two blue.

    Returned as ``(central_a, central_b, outer_a, outer_b)`` with each pair sorted.
    """
    colors = s.colors()
    out = []
    for u, v in g.edges:
        if not (colors.white >> u & 1 and colors.white >> v & 1):
            continue
        common = g.adj[u] & g.adj[v]
        if common.bit_count() != 2:
            continue
        a, b = bits(common)
        if g.has_edge(a, b):
            continue
        if colors.blue >> a & 1 and colors.blue >> b & 1:
            out.append((u, v, a, b))
    return out


def classify_cubic_case(s: ResidualState) -> CubicCase:
    g = s.graph
    white = s.white
    if not white:
        return CubicCase("Done")
    for v in bits(white):
        if white_degree(g, white, v) == 3:
            return CubicCase("C1", (v,))
    comps = white_components(g, white)
    for c in comps:
        if c.is_cycle and c.size == 3:
            return CubicCase("C2", c.vertices)
    for c in comps:
        if not c.is_cycle and c.size >= 3:
            return CubicCase("C3", c.order)
    for c in comps:
        if c.size == 2:
            u, v = c.vertices
            if (g.adj[u] & g.adj[v]).bit_count() < 2:
                return CubicCase("C4", c.vertices)
    ks = k_subgraphs(g, s)
    if ks:
        best = min(ks, key=lambda k: tuple(sorted(k)))
        return CubicCase("C5", best)
    for c in comps:
        if c.is_cycle:
            return CubicCase("C6", _orient_cycle(g, c))
    for c in comps:
        if c.size == 1:
            return CubicCase("C7", c.vertices)
    raise AssertionError("white vertices remain but no case applies")


def _orient_cycle(g: Graph, c: WhiteComponent) -> tuple[int, ...]:
    """Cycle order from its smallest vertex ``v1`` so that ``v1 v2`` lies in a triangle."""
    order = c.order
    v1, fwd, back = order[0], order[1], order[-1]
    if not g.adj[v1] & g.adj[fwd] and g.adj[v1] & g.adj[back]:
        return (v1,) + tuple(reversed(order[1:]))
    return order


class CubicPolicy:
    """Case-analysis Dominator for claw-free cubic graphs.

    The C6 prescription spans two Dominator turns: after playing ``v2`` on a
    white cycle of length ``j >= 6``, a Staller reply of ``v1`` is answered by
    ``v_{j-2}``; any other reply makes the policy re-classify.
    """

    def __init__(self, graph: Graph) -> None:
        if not (is_cubic(graph) and is_claw_free(graph)):
            raise HypothesisError("cubic policy needs a claw-free cubic graph")
        self.graph = graph
        self._pending: tuple[int, int] | None = None
        self._last_staller: int | None = None
        self.last_case: str | None = None

    def reset(self) -> None:
        self._pending = None
        self._last_staller = None
        self.last_case = None

    def observe(self, move: int) -> None:
        self._last_staller = move

    def choose(self, s: ResidualState) -> int:
        pending, self._pending = self._pending, None
        if pending is not None:
            trigger, reply = pending
            if self._last_staller == trigger and s.white >> reply & 1:
                self.last_case = "C6-reply"
                return reply
        case = classify_cubic_case(s)
        if case.case == "Done":
            raise GameOverError("no move in a finished game")
        if case.case == "C6" and len(case.witness) >= 6:
            cyc = case.witness
            self._pending = (cyc[0], cyc[-3])
        self.last_case = case.case
        return case.move


# -- edge circuit greedy -------------------------------------------------------------


class EdgeCircuitPolicy:
    """Play a legal edge of maximum decrease, smallest index on ties."""

    def __init__(self, graph: Graph, profile: PotentialProfile) -> None:
        if profile.circuit is None:
            raise HypothesisError("edge-circuit policy needs a fixed circuit")
        if not (profile.circuit.is_valid_in(graph) and profile.circuit.is_dominating_in(graph)):
            raise HypothesisError("circuit is not an edge dominating circuit of the graph")
        self.graph = graph
        self.profile = profile
        self.last_case: str | None = None

    def reset(self) -> None:
        self.last_case = None

    def observe(self, move: int) -> None:
        pass

    def choose(self, s: EdgeResidualState) -> int:
        best, best_gain = -1, -1
        for e in bits(edge_legal_moves(s)):
            gain = move_gain(self.profile, s, e)
            if gain > best_gain:
                best, best_gain = e, gain
        if best < 0:
            raise GameOverError("no move in a finished game")
        self.last_case = "greedy"
        return best


# -- claw-free, minimum degree 2 ---------------------------------------------------


def white_is_cycle_union(g: Graph, white: VertexSet) -> bool:
    if not white or max_white_degree(g, white) > 2:
        return False
    return all(c.is_cycle for c in white_components(g, white))


def in_endgame_position(s: PhasedState | ResidualState) -> bool:
    """No blue vertex and the white vertices induce a disjoint union of cycles."""
    base = s.base if isinstance(s, PhasedState) else s
    return base.colors().blue == 0 and white_is_cycle_union(base.graph, base.white)


@dataclass
class _Endgame:
    labels: list[int]
    solver: GameSolver
    white_at_entry: int
    moves: int = 0


class ClawFree2Policy:
    """Case-analysis Dominator for claw-free graphs with minimum degree 2.

    Once a Dominator turn finds no blue vertex and only white cycles, the
    rest of the game is played exactly on the graph induced by the white
    vertices, which is the same game because every other vertex is red.
    """

    def __init__(self, graph: Graph) -> None:
        if not is_claw_free(graph) or min_degree(graph) < 2:
            raise HypothesisError("policy needs a claw-free graph with minimum degree 2")
        self.graph = graph
        self._endgame: _Endgame | None = None
        self.last_case: str | None = None

    def reset(self) -> None:
        self._endgame = None
        self.last_case = None

    def observe(self, move: int) -> None:
        pass

    @property
    def endgame_entry_white(self) -> int | None:
        return None if self._endgame is None else self._endgame.white_at_entry

    def choose(self, s: PhasedState) -> int:
        s = s.at_turn()
        if s.is_over:
            raise GameOverError("no move in a finished game")
        g = self.graph
        if self._endgame is None and in_endgame_position(s):
            sub, labels = g.induced(s.white)
            self._endgame = _Endgame(
                list(labels), GameSolver(sub, continuation_pruning=True), s.white.bit_count()
            )
        if self._endgame is not None:
            self.last_case = "E"
            return self._endgame_move(s)
        case, move = classify_clawfree2_case(s)
        self.last_case = case
        return move

    def _endgame_move(self, s: PhasedState) -> int:
        eg = self._endgame
        index = {v: i for i, v in enumerate(eg.labels)}
        dominated = 0
        for v in eg.labels:
            if s.dominated >> v & 1:
                dominated |= 1 << index[v]
        sub_state = ResidualState(eg.solver.graph, dominated, Player.DOMINATOR)
        eg.moves += 1
        return eg.labels[eg.solver.optimal_move(sub_state)]


def classify_clawfree2_case(s: PhasedState) -> tuple[str, int]:
    """First applicable case among D1..D5 and its prescribed vertex."""
    g = s.graph
    white = s.white
    blue = s.base.colors().blue
    degw = {v: white_degree(g, white, v) for v in bits(white)}
    top = max(degw.values())
    if top >= 3:
        return "D1", min(v for v in degw if degw[v] == top)
    comps = white_components(g, white)
    if top == 2:
        for c in comps:
            if not c.is_cycle and c.size >= 3:
                return "D2", c.order[1]
    for c in comps:
        if c.size == 2:
            u1, u2 = c.vertices
            if ((g.adj[u1] | g.adj[u2]) & blue).bit_count() >= 2:
                return "D3", u1
    if top == 2:
        for c in comps:
            if c.is_cycle:
                touching = [v for v in c.vertices if g.adj[v] & blue]
                if touching:
                    return "D4", touching[0]
    for c in comps:
        if not c.is_cycle:
            return "D5", c.vertices[0]
    raise AssertionError("no case applies outside the all-cycles endgame")


def make_policy(graph: Graph, profile: PotentialProfile):
    if profile.kind is ProfileKind.CUBIC_CLAW_FREE:
        return CubicPolicy(graph)
    if profile.kind is ProfileKind.EDGE_CIRCUIT:
        return EdgeCircuitPolicy(graph, profile)
    return ClawFree2Policy(graph)
