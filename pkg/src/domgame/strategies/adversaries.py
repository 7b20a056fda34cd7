"""Staller models used against the Dominator policies."""

from __future__ import annotations

import random

from ..edge_game import EdgeResidualState, LineGraphEdgeSolver, edge_legal_moves
from ..game import GameSolver
from ..graph import Graph, bits
from .potentials import PhasedState, PotentialProfile, move_gain


def _base(state):
    return state.base if isinstance(state, PhasedState) else state


def _legal(state) -> list[int]:
    base = _base(state)
    if isinstance(base, EdgeResidualState):
        return list(bits(edge_legal_moves(base)))
    return list(bits(base.legal_moves()))


class ExactAdversary:
    """Plays a move maximising the exact remaining game length."""

    name = "exact"

    def __init__(self, graph: Graph, *, edge_game: bool = False) -> None:
        self.graph = graph
        if edge_game:
            self._solver = LineGraphEdgeSolver(graph)
        else:
            self._solver = GameSolver(graph, continuation_pruning=True)

    def choose(self, state) -> int:
        return self._solver.optimal_move(_base(state))


class GreedyMinGain:
    """Plays a move of least potential decrease, smallest index on ties."""

    name = "greedy"

    def __init__(self, profile: PotentialProfile) -> None:
        self.profile = profile

    def choose(self, state) -> int:
        return min(_legal(state), key=lambda m: (move_gain(self.profile, state, m), m))


class SeededRandom:
    """Uniform legal move from a private seeded generator."""

    name = "random"

    def __init__(self, seed: int = 0) -> None:
        self.seed = seed
        self._rng = random.Random(seed)

    def choose(self, state) -> int:
        return self._rng.choice(_legal(state))


STALLER_MODELS = ("exact", "greedy", "random")


def make_staller(
    name: str, graph: Graph, profile: PotentialProfile, *, seed: int = 0, edge_game: bool = False
):
    if name == "exact":
        return ExactAdversary(graph, edge_game=edge_game)
    if name == "greedy":
        return GreedyMinGain(profile)
    if name == "random":
        return SeededRandom(seed)
    raise ValueError(f"unknown staller model {name!r}; expected one of {STALLER_MODELS}")


__all__ = [
    "ExactAdversary",
    "GreedyMinGain",
    "STALLER_MODELS",
    "SeededRandom",
    "make_staller",
]
