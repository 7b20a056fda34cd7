"""Edge domination game: exact solver, line-graph cross-check, handle
augmentation and the imagination-strategy lockstep.

The solver here is a plain memoised minimax written directly against edge
neighbourhoods, deliberately independent of :mod:`domgame.game`, so that
:func:`edge_game_value` and :func:`edge_game_value_via_line_graph` are two
separate computations of the same number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .game import GameOverError, GameSolver, IllegalMoveError, Player
from .graph import DEFAULT_VERTEX_CAP, EdgeSet, Graph, GraphError, VertexSet, bits, line_graph
from .recognizers import Trail


class EdgeColors(NamedTuple):
    white: EdgeSet
    blue: EdgeSet
    red: EdgeSet


@dataclass(frozen=True)
class EdgeResidualState:
    graph: Graph
    dominated_edges: EdgeSet
    mover: Player = Player.DOMINATOR

    @property
    def white(self) -> EdgeSet:
        return self.graph.all_edges & ~self.dominated_edges

    @property
    def is_over(self) -> bool:
        return self.white == 0

    def colors(self) -> EdgeColors:
        return edge_colors(self)

    def white_vertices(self) -> VertexSet:
        """Vertices incident to at least one white edge; all others are red."""
        return self.graph.vertices_of(self.white)

    def legal_moves(self) -> EdgeSet:
        return edge_legal_moves(self)

    def apply(self, e: int) -> EdgeResidualState:
        return apply_edge_move(self, e)


def initial_edge_state(
    g: Graph, start: Player = Player.DOMINATOR, predominated: EdgeSet = 0
) -> EdgeResidualState:
    return EdgeResidualState(g, predominated & g.all_edges, start)


def edge_colors(s: EdgeResidualState) -> EdgeColors:
    g = s.graph
    red = 0
    for e in range(g.m):
        if g.edge_closed_neighborhood(e) & ~s.dominated_edges == 0:
            red |= 1 << e
    return EdgeColors(s.white, s.dominated_edges & ~red, red)


def edge_legal_moves(s: EdgeResidualState) -> EdgeSet:
    white = s.white
    out = 0
    for e in range(s.graph.m):
        if s.graph.edge_closed_neighborhood(e) & white:
            out |= 1 << e
    return out


def apply_edge_move(s: EdgeResidualState, e: int) -> EdgeResidualState:
    g = s.graph
    if not 0 <= e < g.m or not g.edge_closed_neighborhood(e) & s.white:
        raise IllegalMoveError(f"edge {e} dominates no new edge")
    return EdgeResidualState(g, s.dominated_edges | g.edge_closed_neighborhood(e), s.mover.other)


def blue_edges_have_white_and_red_end(s: EdgeResidualState) -> bool:
    """Every blue edge joins a white vertex to a red vertex."""
    white_v = s.white_vertices()
    for e in bits(s.colors().blue):
        u, v = s.graph.edges[e]
        if (white_v >> u & 1) == (white_v >> v & 1):
            return False
    return True


class EdgeGameSolver:
    """Memoised minimax over ``(dominated edge set, mover)``."""

    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        self._nbhd = [graph.edge_closed_neighborhood(e) for e in range(graph.m)]
        self._memo: dict[tuple[int, bool], int] = {}

    def value(self, dominated: EdgeSet = 0, mover: Player = Player.DOMINATOR) -> int:
        return self._value(dominated & self.graph.all_edges, mover is Player.DOMINATOR)

    def _value(self, dominated: int, dominator: bool) -> int:
        full = self.graph.all_edges
        if dominated == full:
            return 0
        key = (dominated, dominator)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        seen = set()
        best = math.inf if dominator else -1
        for nb in self._nbhd:
            after = dominated | nb
            if after == dominated or after in seen:
                continue
            seen.add(after)
            val = 1 + self._value(after, not dominator)
            best = min(best, val) if dominator else max(best, val)
        self._memo[key] = best
        return best

    def move_values(self, s: EdgeResidualState) -> dict[int, int]:
        return {
            e: 1 + self.value(s.dominated_edges | self._nbhd[e], s.mover.other)
            for e in bits(edge_legal_moves(s))
        }

    def optimal_move(self, s: EdgeResidualState) -> int:
        values = self.move_values(s)
        if not values:
            raise GameOverError("no legal edge: every edge is dominated")
        pick = min if s.mover is Player.DOMINATOR else max
        target = pick(values.values())
        return min(e for e, val in values.items() if val == target)


class LineGraphEdgeSolver:
    """Edge-game values computed on ``L(G)`` with the vertex engine.

    Line-graph vertex ``i`` is edge ``i`` of the root, so dominated edge sets
    carry over unchanged.
    """

    def __init__(self, graph: Graph, *, continuation_pruning: bool = True) -> None:
        self.graph = graph
        if graph.m:
            self._solver = GameSolver(
                line_graph(graph).graph, continuation_pruning=continuation_pruning
            )

    def value(self, dominated: EdgeSet = 0, mover: Player = Player.DOMINATOR) -> int:
        if self.graph.m == 0:
            return 0
        return self._solver.value(dominated & self.graph.all_edges, mover)

    def move_values(self, s: EdgeResidualState) -> dict[int, int]:
        g = self.graph
        return {
            e: 1 + self.value(s.dominated_edges | g.edge_closed_neighborhood(e), s.mover.other)
            for e in bits(edge_legal_moves(s))
        }

    def optimal_move(self, s: EdgeResidualState) -> int:
        values = self.move_values(s)
        if not values:
            raise GameOverError("no legal edge: every edge is dominated")
        pick = min if s.mover is Player.DOMINATOR else max
        target = pick(values.values())
        return min(e for e, val in values.items() if val == target)


def edge_game_value(
    g: Graph, start: Player = Player.DOMINATOR, predominated: EdgeSet = 0
) -> int:
    """``gamma_{e,g}`` (or the S-start / predominated variant) by direct minimax."""
    if g.m == 0:
        return 0
    return EdgeGameSolver(g).value(predominated, start)


def edge_game_value_via_line_graph(g: Graph, start: Player = Player.DOMINATOR) -> int:
    if g.m == 0:
        raise GraphError("edgeless graph has no line graph")
    return GameSolver(line_graph(g).graph).value(0, start)


# -- handle augmentation --------------------------------------------------------


class TrailError(ValueError):
    pass


@dataclass(frozen=True)
class AugmentedGraph:
    """``G`` plus two new vertices ``v1'`` and ``vl'`` closing the trail into a circuit.

    ``embedding[i]`` is the index in ``F`` of edge ``i`` of ``G``;
    ``handle_edges`` holds the ``F`` indices of ``v1 v1'``, ``v1' vl'`` and
    ``vl vl'`` in that order, and ``d0`` is the singleton set of the middle one.
    """

    base: Graph
    F: Graph
    trail: Trail
    circuit: Trail
    embedding: tuple[int, ...]
    handle_edges: tuple[int, int, int]
    d0: EdgeSet
    _to_base: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_to_base", {f: i for i, f in enumerate(self.embedding)})

    def base_index(self, f: int) -> int | None:
        """Index in ``G`` of ``F``-edge ``f``; ``None`` for handle edges."""
        return self._to_base.get(f)

    def extended_label(self, f: int) -> int:
        """``G`` indices for embedded edges, then ``m, m+1, m+2`` for the handle."""
        i = self._to_base.get(f)
        if i is not None:
            return i
        return self.base.m + self.handle_edges.index(f)

    def to_base_set(self, f_edges: EdgeSet) -> EdgeSet:
        out = 0
        for f in bits(f_edges):
            i = self._to_base.get(f)
            if i is not None:
                out |= 1 << i
        return out

    def from_base_set(self, edges: EdgeSet) -> EdgeSet:
        out = 0
        for i in bits(edges):
            out |= 1 << self.embedding[i]
        return out


def augment_with_handle(g: Graph, t: Trail) -> AugmentedGraph:
    if t.closed:
        raise TrailError("trail is closed; the handle needs an open trail")
    if not t.is_valid_in(g):
        raise TrailError("not a trail of the graph")
    v1, vl = t.vertices[0], t.vertices[-1]
    if v1 == vl:
        raise TrailError("trail endpoints coincide")
    if not t.is_dominating_in(g):
        raise TrailError("trail vertices do not cover every edge")
    a, b = g.n, g.n + 1
    F = Graph.from_edges(
        g.n + 2,
        list(g.edges) + [(v1, a), (a, b), (vl, b)],
        cap=max(DEFAULT_VERTEX_CAP, g.n + 2),
    )
    embedding = tuple(F.edge_index(u, v) for u, v in g.edges)
    handle = (F.edge_index(v1, a), F.edge_index(a, b), F.edge_index(vl, b))
    circuit = Trail(
        tuple(t.vertices) + (b, a, v1),
        tuple(embedding[e] for e in t.edge_indices) + (handle[2], handle[1], handle[0]),
        closed=True,
    )
    if not (circuit.is_valid_in(F) and circuit.is_dominating_in(F)):
        raise TrailError("extended trail is not an edge dominating circuit")
    return AugmentedGraph(g, F, t, circuit, embedding, handle, 1 << handle[1])


# -- imagination strategy lockstep -------------------------------------------------


@dataclass
class LockstepStep:
    player: Player
    source_game: int
    move: tuple[int, int]
    interpreted: tuple[int, int]
    copied: bool
    undominated_1: EdgeSet
    undominated_2: EdgeSet

    @property
    def in_lockstep(self) -> bool:
        return self.undominated_1 == self.undominated_2


@dataclass
class LockstepReport:
    graph: Graph
    augmented: AugmentedGraph
    steps: list[LockstepStep]
    length_1: int
    length_2: int
    value_graph: int
    value_augmented: int
    replaced_handle_moves: int

    @property
    def invariant_held(self) -> bool:
        return all(step.in_lockstep for step in self.steps)

    @property
    def length(self) -> int:
        return self.length_1

    @property
    def bound(self) -> int:
        return -(-self.graph.m // 2)

    @property
    def verdict(self) -> bool:
        """``gamma(G) <= k <= gamma(F^D0) <= ceil(m/2)`` with the invariant intact."""
        return (
            self.invariant_held
            and self.length_1 == self.length_2
            and self.value_graph <= self.length_1 <= self.value_augmented <= self.bound
        )


def imagination_lockstep(g: Graph, t: Trail) -> LockstepReport:
    """Play Game 1 on ``g`` against an exact Staller while Dominator plays
    exactly in the imagined Game 2 on ``F^{D0}``, interpreting moves across."""
    aug = augment_with_handle(g, t)
    F = aug.F
    solver_1 = LineGraphEdgeSolver(g)
    solver_2 = LineGraphEdgeSolver(F)
    game_1 = initial_edge_state(g)
    game_2 = initial_edge_state(F, predominated=F.edge_closed_neighborhood(next(bits(aug.d0))))
    value_graph = solver_1.value()
    value_augmented = solver_2.value(game_2.dominated_edges)
    # never play a handle edge at the trail ends; use the first/last trail edge instead
    replacement = {
        aug.handle_edges[0]: aug.embedding[t.edge_indices[0]],
        aug.handle_edges[2]: aug.embedding[t.edge_indices[-1]],
    }
    steps: list[LockstepStep] = []
    replaced = 0
    k1 = k2 = 0
    mover = Player.DOMINATOR
    while not (game_1.is_over and game_2.is_over):
        if game_1.is_over or game_2.is_over:
            break
        if mover is Player.DOMINATOR:
            move = solver_2.optimal_move(game_2)
            if move in replacement:
                move = replacement[move]
                replaced += 1
            game_2 = game_2.apply(move)
            k2 += 1
            base = aug.base_index(move)
            copied = base is not None and bool(edge_legal_moves(game_1) >> base & 1)
            target = base if copied else _smallest(edge_legal_moves(game_1))
            game_1 = game_1.apply(target)
            k1 += 1
            played, interp = (2, move), (1, target)
            source = 2
        else:
            move = solver_1.optimal_move(game_1)
            game_1 = game_1.apply(move)
            k1 += 1
            f = aug.embedding[move]
            copied = bool(edge_legal_moves(game_2) >> f & 1)
            target = f if copied else _smallest(edge_legal_moves(game_2))
            game_2 = game_2.apply(target)
            k2 += 1
            played, interp = (1, move), (2, target)
            source = 1
        steps.append(
            LockstepStep(
                player=mover,
                source_game=source,
                move=played,
                interpreted=interp,
                copied=copied,
                undominated_1=game_1.white,
                undominated_2=aug.to_base_set(game_2.white)
                | ((game_2.white & ~aug.from_base_set(g.all_edges)) << g.m),
            )
        )
        mover = mover.other
    # finish whichever game is still running if lockstep broke
    while not game_1.is_over:
        game_1 = game_1.apply(solver_1.optimal_move(game_1))
        k1 += 1
    while not game_2.is_over:
        game_2 = game_2.apply(solver_2.optimal_move(game_2))
        k2 += 1
    return LockstepReport(g, aug, steps, k1, k2, value_graph, value_augmented, replaced)


def _smallest(mask: int) -> int:
    if not mask:
        raise GameOverError("no legal move to interpret into")
    return (mask & -mask).bit_length() - 1
