"""Potential functions over residual graphs and the per-move decrease ``s``."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..edge_game import EdgeResidualState
from ..game import Player, ResidualState
from ..graph import Graph, VertexSet, bits
from ..recognizers import Trail


class ProfileKind(str, enum.Enum):
    CUBIC_CLAW_FREE = "cubic"
    EDGE_CIRCUIT = "edge-circuit"
    CLAW_FREE_MIN_DEG2 = "clawfree2"


class ProfileMismatch(TypeError):
    pass


@dataclass(frozen=True)
class PotentialProfile:
    kind: ProfileKind
    circuit: Trail | None = None

    @classmethod
    def cubic(cls) -> PotentialProfile:
        return cls(ProfileKind.CUBIC_CLAW_FREE)

    @classmethod
    def edge_circuit(cls, circuit: Trail) -> PotentialProfile:
        if not circuit.closed:
            raise ValueError("edge-circuit profile needs a closed trail")
        return cls(ProfileKind.EDGE_CIRCUIT, circuit)

    @classmethod
    def claw_free_min_deg2(cls) -> PotentialProfile:
        return cls(ProfileKind.CLAW_FREE_MIN_DEG2)

    @property
    def weights(self) -> dict[str, int]:
        if self.kind is ProfileKind.CUBIC_CLAW_FREE:
            return {"white": 3, "blue": 1, "red": 0}
        if self.kind is ProfileKind.EDGE_CIRCUIT:
            return {"white": 2, "blue_circuit": 1, "blue_outer": 0, "red": 0}
        return {"white": 22, "blue_plus": 10, "blue_minus": 9, "red": 0}


def white_degree(g: Graph, white: VertexSet, v: int) -> int:
    """Number of white neighbours of ``v`` (open neighbourhood)."""
    return (g.adj[v] & white).bit_count()


def max_white_degree(g: Graph, white: VertexSet) -> int:
    return max((white_degree(g, white, v) for v in bits(white)), default=0)


@dataclass(frozen=True)
class PhasedState:
    """Vertex residual state with the two-phase blue tagging.

    ``phase1_dominated`` holds every vertex dominated by a Phase 1 move; a blue
    vertex is B+ exactly when it lies in this set, since a vertex turns blue at
    the moment it is dominated and never changes tag afterwards.
    """

    base: ResidualState
    phase1_dominated: VertexSet = 0
    phase2: bool = False

    @classmethod
    def initial(cls, g: Graph, start: Player = Player.DOMINATOR) -> PhasedState:
        return cls(ResidualState(g, 0, start))

    @property
    def graph(self) -> Graph:
        return self.base.graph

    @property
    def mover(self) -> Player:
        return self.base.mover

    @property
    def white(self) -> VertexSet:
        return self.base.white

    @property
    def dominated(self) -> VertexSet:
        return self.base.dominated

    @property
    def is_over(self) -> bool:
        return self.base.is_over

    def blue_split(self) -> tuple[VertexSet, VertexSet]:
        blue = self.base.colors().blue
        return blue & self.phase1_dominated, blue & ~self.phase1_dominated

    def at_turn(self) -> PhasedState:
        """Switch to Phase 2 if Dominator is to move and ``Delta_W <= 2``."""
        if (
            not self.phase2
            and self.mover is Player.DOMINATOR
            and not self.is_over
            and max_white_degree(self.graph, self.white) <= 2
        ):
            return PhasedState(self.base, self.phase1_dominated, True)
        return self

    def legal_moves(self) -> VertexSet:
        return self.base.legal_moves()

    def apply(self, v: int) -> PhasedState:
        s = self.at_turn()
        newly = s.graph.closed(v) & s.white
        after = s.base.apply(v)
        tagged = s.phase1_dominated if s.phase2 else s.phase1_dominated | newly
        return PhasedState(after, tagged, s.phase2)


State = ResidualState | EdgeResidualState | PhasedState


def potential(profile: PotentialProfile, state: State) -> int:
    kind = profile.kind
    if kind is ProfileKind.CUBIC_CLAW_FREE:
        if isinstance(state, PhasedState):
            state = state.base
        if not isinstance(state, ResidualState):
            raise ProfileMismatch("cubic profile needs a vertex residual state")
        c = state.colors()
        return 3 * c.white.bit_count() + c.blue.bit_count()
    if kind is ProfileKind.EDGE_CIRCUIT:
        if not isinstance(state, EdgeResidualState):
            raise ProfileMismatch("edge-circuit profile needs an edge residual state")
        if profile.circuit is None:
            raise ProfileMismatch("edge-circuit profile has no circuit fixed")
        c = state.colors()
        return 2 * c.white.bit_count() + (c.blue & profile.circuit.edge_set).bit_count()
    if not isinstance(state, PhasedState):
        raise ProfileMismatch("claw-free profile needs a phased vertex state")
    plus, minus = state.blue_split()
    return 22 * state.white.bit_count() + 10 * plus.bit_count() + 9 * minus.bit_count()


def move_gain(profile: PotentialProfile, state: State, move: int) -> int:
    """``s(move)``: decrease of the potential caused by playing ``move``."""
    return potential(profile, state) - potential(profile, state.apply(move))
