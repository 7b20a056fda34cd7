"""Exact solver for the (vertex) domination game.

Positions are identified by the set of dominated vertices and the player to
move; the history of played vertices never matters for the optimal
continuation.  Values count the moves still to be played under optimal play,
Dominator minimising and Staller maximising.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph, VertexSet, bits


class Player(str, enum.Enum):
    DOMINATOR = "D"
    STALLER = "S"

    @property
    def other(self) -> Player:
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR


class IllegalMoveError(ValueError):
    pass


class GameOverError(ValueError):
    """Raised when a move is requested in a finished game."""


class Colors(NamedTuple):
    white: VertexSet
    blue: VertexSet
    red: VertexSet


@dataclass(frozen=True)
class ResidualState:
    graph: Graph
    dominated: VertexSet
    mover: Player = Player.DOMINATOR

    @property
    def white(self) -> VertexSet:
        return self.graph.all_vertices & ~self.dominated

    @property
    def is_over(self) -> bool:
        return self.white == 0

    def colors(self) -> Colors:
        return vertex_colors(self)

    def legal_moves(self) -> VertexSet:
        return legal_moves(self)

    def apply(self, v: int) -> ResidualState:
        return apply_move(self, v)


def initial_state(
    g: Graph, start: Player = Player.DOMINATOR, predominated: VertexSet = 0
) -> ResidualState:
    return ResidualState(g, predominated & g.all_vertices, start)


def vertex_colors(s: ResidualState) -> Colors:
    g = s.graph
    red = 0
    for v in range(g.n):
        if g.closed(v) & ~s.dominated == 0:
            red |= 1 << v
    white = g.all_vertices & ~s.dominated
    return Colors(white, s.dominated & ~red, red)


def legal_moves(s: ResidualState) -> VertexSet:
    white = s.white
    out = 0
    for v in range(s.graph.n):
        if s.graph.closed(v) & white:
            out |= 1 << v
    return out


def apply_move(s: ResidualState, v: int) -> ResidualState:
    if not 0 <= v < s.graph.n or not s.graph.closed(v) & s.white:
        raise IllegalMoveError(f"vertex {v} dominates no new vertex")
    return ResidualState(s.graph, s.dominated | s.graph.closed(v), s.mover.other)


class GameSolver:
    """Memoised alpha-beta minimax for one graph.

    The table maps ``(undominated set, dominator_to_move)`` to known
    ``(lower, upper)`` bounds on the remaining game length.  With
    ``continuation_pruning`` the move lists are cut to inclusion-maximal
    newly-dominated sets for Dominator and inclusion-minimal ones for Staller
    (Continuation Principle); values are identical either way.
    """

    def __init__(self, graph: Graph, *, continuation_pruning: bool = False) -> None:
        self.graph = graph
        self.continuation_pruning = continuation_pruning
        self._closed = [graph.closed(v) for v in range(graph.n)]
        self._bounds: dict[tuple[int, bool], tuple[int, int]] = {}
        self.nodes = 0

    def _moves(self, white: int, dominator: bool) -> list[int]:
        gains = {c & white for c in self._closed}
        gains.discard(0)
        ordered = sorted(gains, key=lambda x: (x.bit_count(), x), reverse=dominator)
        if not self.continuation_pruning:
            return ordered
        kept: list[int] = []
        for x in ordered:
            if dominator:
                if any(x | k == k for k in kept):
                    continue
            elif any(x & k == k for k in kept):
                continue
            kept.append(x)
        return kept

    def _search(self, white: int, dominator: bool, alpha: int, beta: int) -> int:
        if not white:
            return 0
        self.nodes += 1
        key = (white, dominator)
        lo, hi = self._bounds.get(key, (1, white.bit_count()))
        if lo >= beta or lo == hi:
            return lo
        if hi <= alpha:
            return hi
        a, b = max(alpha, lo - 1), min(beta, hi + 1)
        if dominator:
            best = hi + 1
            for x in self._moves(white, True):
                val = 1 + self._search(white & ~x, False, a - 1, min(b, best) - 1)
                if val < best:
                    best = val
                    if best <= a:
                        break
        else:
            best = lo - 1
            for x in self._moves(white, False):
                val = 1 + self._search(white & ~x, True, max(a, best) - 1, b - 1)
                if val > best:
                    best = val
                    if best >= b:
                        break
        if best <= a:
            hi = min(hi, best)
        elif best >= b:
            lo = max(lo, best)
        else:
            lo = hi = best
        self._bounds[key] = (lo, hi)
        return best

    def value(self, dominated: VertexSet = 0, mover: Player = Player.DOMINATOR) -> int:
        white = self.graph.all_vertices & ~dominated
        n = white.bit_count()
        return self._search(white, mover is Player.DOMINATOR, -1, n + 1)

    def state_value(self, s: ResidualState) -> int:
        return self.value(s.dominated, s.mover)

    def move_values(self, s: ResidualState) -> dict[int, int]:
        """Total remaining length after each legal move, the move included."""
        return {
            v: 1 + self.value(s.dominated | self._closed[v], s.mover.other)
            for v in bits(legal_moves(s))
        }

    def optimal_move(self, s: ResidualState) -> int:
        values = self.move_values(s)
        if not values:
            raise GameOverError("no legal move: every vertex is dominated")
        pick = min if s.mover is Player.DOMINATOR else max
        target = pick(values.values())
        return min(v for v, val in values.items() if val == target)

    def principal_variation(self, s: ResidualState) -> list[int]:
        line = []
        while not s.is_over:
            v = self.optimal_move(s)
            line.append(v)
            s = s.apply(v)
        return line


def game_value(
    g: Graph,
    start: Player = Player.DOMINATOR,
    predominated: VertexSet = 0,
    *,
    continuation_pruning: bool = False,
) -> int:
    """Number of moves under optimal play (``gamma_g`` / ``gamma_g'`` when nothing is predominated)."""
    return GameSolver(g, continuation_pruning=continuation_pruning).value(predominated, start)


def optimal_move(s: ResidualState, solver: GameSolver | None = None) -> int:
    """Smallest-index move attaining the mover's optimum."""
    if solver is None or solver.graph is not s.graph:
        solver = GameSolver(s.graph)
    return solver.optimal_move(s)
