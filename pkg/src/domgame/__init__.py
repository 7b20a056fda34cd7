"""Exact solvers, Dominator strategies and sweeps for the domination game."""

from .edge_game import EdgeGameSolver, LineGraphEdgeSolver, edge_game_value
from .game import GameSolver, Player, ResidualState, game_value, initial_state
from .graph import Graph, GraphError, line_graph
from .graph6 import encode_graph6, parse_graph6

__version__ = "0.1.0"

__all__ = [
    "EdgeGameSolver",
    "GameSolver",
    "Graph",
    "GraphError",
    "LineGraphEdgeSolver",
    "Player",
    "ResidualState",
    "edge_game_value",
    "encode_graph6",
    "game_value",
    "initial_state",
    "line_graph",
    "parse_graph6",
]
