"""Simulation of Dominator policies against Staller models, with per-move
audits of the decrease bounds that the potential arguments rely on."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..edge_game import (
    EdgeResidualState,
    blue_edges_have_white_and_red_end,
    edge_legal_moves,
    initial_edge_state,
)
from ..game import Player, ResidualState
from ..graph import Graph, bits, components, is_connected, is_cycle_graph, is_cycle_up_to_isolates
from ..graph6 import encode_graph6
from ..recognizers import UNKNOWN, find_edge_dominating_circuit
from .adversaries import make_staller
from .policies import (
    classify_clawfree2_case,
    classify_cubic_case,
    in_endgame_position,
    k_subgraphs,
    make_policy,
)
from .potentials import (
    PhasedState,
    PotentialProfile,
    ProfileKind,
    ProfileMismatch,
    potential,
    white_degree,
)

# least decrease guaranteed by each Dominator case
CUBIC_CASE_GAIN = {"C1": 9, "C2": 9, "C3": 9, "C4": 9, "C5": 8, "C6": 8, "C7": 6}
CLAWFREE_CASE_GAIN = {"D1": 58, "D2": 65, "D3": 62, "D4": 58, "D5": 40}


@dataclass(frozen=True)
class MoveRecord:
    player: Player
    move: int
    gain: int
    case: str | None = None


@dataclass(frozen=True)
class ClaimVerdict:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class AuditReport:
    graph: Graph
    profile: PotentialProfile
    staller: str
    seed: int
    start: Player
    moves: list[MoveRecord]
    initial_potential: int
    final_potential: int
    bound: int
    claims: list[ClaimVerdict] = field(default_factory=list)
    blocks: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.moves)

    @property
    def gains(self) -> list[int]:
        return [m.gain for m in self.moves]

    @property
    def within_bound(self) -> bool:
        return self.length <= self.bound

    @property
    def verdict(self) -> bool:
        return self.within_bound and all(c.passed for c in self.claims)

    def to_json(self) -> dict:
        return {
            "graph6": encode_graph6(self.graph),
            "profile": self.profile.kind.value,
            "staller": self.staller,
            "seed": self.seed,
            "start": self.start.value,
            "moves": [
                {"player": m.player.value, "move": m.move, "case": m.case} for m in self.moves
            ],
            "s": self.gains,
            "claims": [c.to_json() for c in self.claims],
            "blocks": [list(b) for b in self.blocks],
            "length": self.length,
            "bound": self.bound,
            "verdict": self.verdict,
        }


def policy_bound(g: Graph, profile: PotentialProfile, start: Player = Player.DOMINATOR) -> int:
    """Length guaranteed by the policy's theorem on ``g``."""
    if profile.kind is ProfileKind.CUBIC_CLAW_FREE:
        return g.n // 2 if start is Player.DOMINATOR else (g.n - 1) // 2
    if profile.kind is ProfileKind.EDGE_CIRCUIT:
        return -(-g.m // 2) if is_cycle_up_to_isolates(g) else g.m // 2
    if is_connected(g) and not is_cycle_graph(g):
        return 11 * g.n // 20
    return (11 * g.n + 9) // 20


def _initial_state(g: Graph, profile: PotentialProfile, start: Player):
    if profile.kind is ProfileKind.EDGE_CIRCUIT:
        return initial_edge_state(g, start)
    if profile.kind is ProfileKind.CLAW_FREE_MIN_DEG2:
        return PhasedState.initial(g, start)
    return ResidualState(g, 0, start)


def resolve_profile(g: Graph, profile: PotentialProfile | ProfileKind | str) -> PotentialProfile:
    """Turn a profile name into a profile, finding a circuit when one is needed."""
    if isinstance(profile, PotentialProfile):
        return profile
    kind = ProfileKind(profile)
    if kind is ProfileKind.EDGE_CIRCUIT:
        circuit = find_edge_dominating_circuit(g)
        if circuit is None or circuit is UNKNOWN:
            raise ProfileMismatch("graph has no edge dominating circuit within the search cap")
        return PotentialProfile.edge_circuit(circuit)
    return PotentialProfile(kind)


def simulate(
    g: Graph,
    profile: PotentialProfile | ProfileKind | str,
    staller: str = "exact",
    *,
    seed: int = 0,
    start: Player = Player.DOMINATOR,
) -> AuditReport:
    """Play the profile's Dominator policy against a Staller model and audit the trace."""
    profile = resolve_profile(g, profile)
    if start is Player.STALLER and profile.kind is not ProfileKind.CUBIC_CLAW_FREE:
        raise ProfileMismatch("Staller-start simulation is only defined for the cubic profile")
    policy = make_policy(g, profile)
    adversary = make_staller(
        staller, g, profile, seed=seed, edge_game=profile.kind is ProfileKind.EDGE_CIRCUIT
    )
    state = _initial_state(g, profile, start)
    f0 = potential(profile, state)
    moves: list[MoveRecord] = []
    while not state.is_over:
        if isinstance(state, PhasedState):
            state = state.at_turn()
        before = potential(profile, state)
        if state.mover is Player.DOMINATOR:
            move = policy.choose(state)
            case = policy.last_case
        else:
            move = adversary.choose(state)
            policy.observe(move)
            case = None
        player = state.mover
        state = state.apply(move)
        moves.append(MoveRecord(player, move, before - potential(profile, state), case))
    report = AuditReport(
        graph=g,
        profile=profile,
        staller=staller,
        seed=seed,
        start=start,
        moves=moves,
        initial_potential=f0,
        final_potential=potential(profile, state),
        bound=policy_bound(g, profile, start),
    )
    report.claims = audit_claims(report, profile)
    return report


# -- trace audits ---------------------------------------------------------------------


def audit_claims(report: AuditReport, profile: PotentialProfile) -> list[ClaimVerdict]:
    if report.profile.kind is not profile.kind:
        raise ProfileMismatch("report was produced under a different profile")
    total = sum(report.gains)
    telescoping = ClaimVerdict(
        "telescoping",
        total == report.initial_potential - report.final_potential and report.final_potential == 0,
        f"sum s = {total}, f(initial) = {report.initial_potential}",
    )
    if profile.kind is ProfileKind.CUBIC_CLAW_FREE:
        verdicts = _audit_cubic(report)
    elif profile.kind is ProfileKind.EDGE_CIRCUIT:
        verdicts = _audit_edge(report, profile)
    else:
        verdicts = _audit_clawfree(report)
    return [telescoping] + verdicts


def _collect(name: str, failures: list[str]) -> ClaimVerdict:
    return ClaimVerdict(name, not failures, "; ".join(failures[:5]))


def structure_vertices(s: ResidualState) -> int:
    """White vertices that are isolated in ``G^D[W]``, lie on a white cycle of
    length at least 4, or are central in a K-subgraph."""
    g = s.graph
    white = s.white
    out = 0
    for comp in components(g, white):
        size = comp.bit_count()
        if size == 1:
            out |= comp
        elif size >= 4 and all(white_degree(g, comp, v) == 2 for v in bits(comp)):
            out |= comp
    for u, v, _, _ in k_subgraphs(g, s):
        out |= (1 << u) | (1 << v)
    return out


def q_blocks(gains: Sequence[int], first: int = 0) -> list[tuple[str, int, int]] | None:
    """Split the moves from index ``first`` (a Dominator move) into blocks:
    Q1 one move ending the game with decrease >= 6, Q2 two moves with >= 12,
    Q3 three moves ending the game with >= 18, Q4 four moves with >= 24.
    Shorter blocks are preferred; ``None`` when no split exists."""
    k = len(gains)
    memo: dict[int, list | None] = {k: []}

    def solve(i: int):
        if i in memo:
            return memo[i]
        memo[i] = None
        options = (("Q1", 1, 6, True), ("Q2", 2, 12, False), ("Q3", 3, 18, True), ("Q4", 4, 24, False))
        for name, length, need, must_end in options:
            j = i + length
            if j > k or (must_end and j != k):
                continue
            if sum(gains[i:j]) < need:
                continue
            rest = solve(j)
            if rest is not None:
                memo[i] = [(name, i, j)] + rest
                break
        return memo[i]

    return solve(first)


def _audit_cubic(report: AuditReport) -> list[ClaimVerdict]:
    g = report.graph
    state = ResidualState(g, 0, report.start)
    low, structure, cases = [], [], []
    for t, rec in enumerate(report.moves):
        hit = structure_vertices(state)
        if rec.gain < 3:
            low.append(f"move {t} ({rec.move}) s={rec.gain}")
        if g.closed(rec.move) & state.white & hit and rec.gain < 5:
            structure.append(f"move {t} ({rec.move}) s={rec.gain}")
        need = CUBIC_CASE_GAIN.get(rec.case or "")
        if need is not None and rec.gain < need:
            cases.append(f"{rec.case} move {t} s={rec.gain} < {need}")
        state = state.apply(rec.move)
    verdicts = [
        _collect("legal_move_decrease_at_least_3", low),
        _collect("structure_move_decrease_at_least_5", structure),
        _collect("case_decrease", cases),
    ]
    first = 0
    if report.start is Player.STALLER and report.moves:
        first = 1
        opening = report.moves[0].gain
        verdicts.append(ClaimVerdict("staller_opening_at_least_9", opening >= 9, f"s={opening}"))
    blocks = q_blocks(report.gains, first)
    report.blocks = blocks or []
    verdicts.append(
        ClaimVerdict(
            "dominator_blocks_average_6",
            blocks is not None,
            "" if blocks is not None else f"no block split of s={report.gains[first:]}",
        )
    )
    return verdicts


def adjacent_white_edges(s: EdgeResidualState) -> bool:
    g = s.graph
    white = s.white
    return any(g.edge_closed_neighborhood(e) & white & ~(1 << e) for e in bits(white))


def _audit_edge(report: AuditReport, profile: PotentialProfile) -> list[ClaimVerdict]:
    g = report.graph
    state = initial_edge_state(g, report.start)
    cycle = is_cycle_up_to_isolates(g)
    staller2, dominator6, playable4, ends = [], [], [], []
    for t, rec in enumerate(report.moves):
        adjacent = adjacent_white_edges(state)
        if rec.player is Player.STALLER and rec.gain < 2:
            staller2.append(f"move {t} ({rec.move}) s={rec.gain}")
        if rec.player is Player.DOMINATOR and adjacent and rec.gain < 6:
            if not (cycle and state.dominated_edges == 0):
                dominator6.append(f"move {t} ({rec.move}) s={rec.gain}")
        if not adjacent and rec.gain < 4:
            playable4.append(f"move {t} ({rec.move}) s={rec.gain}")
        state = state.apply(rec.move)
        if not blue_edges_have_white_and_red_end(state):
            ends.append(f"after move {t}")
    return [
        _collect("staller_decrease_at_least_2", staller2),
        _collect("dominator_decrease_at_least_6", dominator6),
        _collect("isolated_white_decrease_at_least_4", playable4),
        _collect("blue_edge_white_red_ends", ends),
    ]


def clique_white_neighbourhoods(s: PhasedState) -> bool:
    g = s.graph
    white = s.white
    for v in bits(s.base.colors().blue):
        nw = list(bits(g.adj[v] & white))
        for i, a in enumerate(nw):
            for b in nw[i + 1:]:
                if not g.has_edge(a, b):
                    return False
    return True


def plus_tag_on_busy_neighbours(s: PhasedState) -> bool:
    g = s.graph
    white = s.white
    plus, minus = s.blue_split()
    for u in bits(white):
        if white_degree(g, white, u) >= 2 and g.adj[u] & minus:
            return False
    return True


def _audit_clawfree(report: AuditReport) -> list[ClaimVerdict]:
    g = report.graph
    state = PhasedState.initial(g, report.start)
    staller22, pairs, cases, clique, tags, phase = [], [], [], [], [], []
    endgame: tuple[int, int] | None = None
    gains = report.gains
    k = len(gains)
    for t, rec in enumerate(report.moves):
        state = state.at_turn()
        if not clique_white_neighbourhoods(state):
            clique.append(f"before move {t}")
        if not plus_tag_on_busy_neighbours(state):
            tags.append(f"before move {t}")
        if not state.phase2 and state.blue_split()[1]:
            phase.append(f"B- vertex in phase 1 before move {t}")
        if rec.player is Player.STALLER and rec.gain < 22:
            staller22.append(f"move {t} ({rec.move}) s={rec.gain}")
        if rec.player is Player.DOMINATOR:
            if endgame is None and in_endgame_position(state):
                endgame = (t, state.white.bit_count())
            if endgame is None:
                if t == k - 1:
                    if rec.gain < 40:
                        pairs.append(f"final move {t} s={rec.gain} < 40")
                elif rec.gain + gains[t + 1] < 80:
                    pairs.append(f"moves {t},{t + 1} total {rec.gain + gains[t + 1]} < 80")
                need = CLAWFREE_CASE_GAIN.get(rec.case or "")
                if need is not None and rec.gain < need:
                    cases.append(f"{rec.case} move {t} s={rec.gain} < {need}")
        state = state.apply(rec.move)
    verdicts = [
        _collect("staller_decrease_at_least_22", staller22),
        _collect("pair_decrease_at_least_80", pairs),
        _collect("case_decrease", cases),
        _collect("blue_white_neighbourhood_is_clique", clique),
        _collect("busy_white_neighbour_has_plus_tag", tags),
        _collect("phase1_has_no_minus_tag", phase),
    ]
    if endgame is not None:
        t0, w = endgame
        j = k - t0
        ok = 2 * j <= w + 1 and 22 * w >= 44 * j - 22
        verdicts.append(ClaimVerdict("endgame_ledger", ok, f"|W|={w}, j={j}"))
    return verdicts


# -- seeded random states --------------------------------------------------------------


@dataclass
class RandomAuditSummary:
    kind: ProfileKind
    states: int = 0
    checks: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _random_prefix(rng: random.Random, initial, legal):
    """Random legal play from ``initial`` stopping at a uniformly chosen non-final point."""
    path = [initial]
    state = initial
    while not state.is_over:
        moves = list(bits(legal(state)))
        state = state.apply(rng.choice(moves))
        path.append(state)
    candidates = [s for s in path if not s.is_over]
    return rng.choice(candidates)


def random_state_audit(
    kind: ProfileKind | str, graphs: Iterable[Graph], count: int, seed: int = 0
) -> RandomAuditSummary:
    """Check the per-move decrease bounds in ``count`` states reached by random play."""
    kind = ProfileKind(kind)
    rng = random.Random(seed)
    pool: list[tuple[Graph, PotentialProfile]] = []
    for g in graphs:
        try:
            pool.append((g, resolve_profile(g, kind)))
        except ProfileMismatch:
            continue
    summary = RandomAuditSummary(kind)
    if not pool:
        return summary
    for _ in range(count):
        g, profile = pool[rng.randrange(len(pool))]
        if kind is ProfileKind.EDGE_CIRCUIT:
            state = _random_prefix(rng, initial_edge_state(g), edge_legal_moves)
            problems = _edge_state_checks(profile, state)
        elif kind is ProfileKind.CUBIC_CLAW_FREE:
            state = _random_prefix(rng, ResidualState(g, 0), lambda s: s.legal_moves())
            problems = _cubic_state_checks(profile, state)
        else:
            state = _random_prefix(rng, PhasedState.initial(g), lambda s: s.legal_moves())
            problems = _clawfree_state_checks(profile, state.at_turn())
        summary.states += 1
        summary.checks += 1
        for name, detail in problems:
            summary.failures.append(
                {
                    "graph6": encode_graph6(g),
                    "dominated": _dominated_of(state),
                    "mover": state.mover.value,
                    "claim": name,
                    "detail": detail,
                }
            )
    return summary


def _dominated_of(state) -> int:
    if isinstance(state, EdgeResidualState):
        return state.dominated_edges
    return state.dominated


def _gains(profile: PotentialProfile, state, moves) -> dict[int, int]:
    f = potential(profile, state)
    return {m: f - potential(profile, state.apply(m)) for m in moves}


def _cubic_state_checks(profile: PotentialProfile, s: ResidualState) -> list[tuple[str, str]]:
    out = []
    gains = _gains(profile, s, bits(s.legal_moves()))
    hit = structure_vertices(s)
    for v, gain in gains.items():
        if gain < 3:
            out.append(("legal_move_decrease_at_least_3", f"v={v} s={gain}"))
        if s.graph.closed(v) & s.white & hit and gain < 5:
            out.append(("structure_move_decrease_at_least_5", f"v={v} s={gain}"))
    case = classify_cubic_case(s)
    need = CUBIC_CASE_GAIN[case.case]
    if gains[case.move] < need:
        out.append(("case_decrease", f"{case.case} v={case.move} s={gains[case.move]}"))
    return out


def _edge_state_checks(profile: PotentialProfile, s: EdgeResidualState) -> list[tuple[str, str]]:
    out = []
    gains = _gains(profile, s, bits(edge_legal_moves(s)))
    adjacent = adjacent_white_edges(s)
    for e, gain in gains.items():
        if gain < 2:
            out.append(("staller_decrease_at_least_2", f"e={e} s={gain}"))
        if not adjacent and gain < 4:
            out.append(("isolated_white_decrease_at_least_4", f"e={e} s={gain}"))
    exempt = is_cycle_up_to_isolates(s.graph) and s.dominated_edges == 0
    if adjacent and not exempt and max(gains.values()) < 6:
        out.append(("dominator_decrease_at_least_6", f"max s={max(gains.values())}"))
    if not blue_edges_have_white_and_red_end(s):
        out.append(("blue_edge_white_red_ends", ""))
    return out


def _clawfree_state_checks(profile: PotentialProfile, s: PhasedState) -> list[tuple[str, str]]:
    out = []
    if not clique_white_neighbourhoods(s):
        out.append(("blue_white_neighbourhood_is_clique", ""))
    if not plus_tag_on_busy_neighbours(s):
        out.append(("busy_white_neighbour_has_plus_tag", ""))
    gains = _gains(profile, s, bits(s.legal_moves()))
    for v, gain in gains.items():
        if gain < 22:
            out.append(("staller_decrease_at_least_22", f"v={v} s={gain}"))
    if s.mover is Player.DOMINATOR and not in_endgame_position(s):
        case, d = classify_clawfree2_case(s)
        after = s.apply(d)
        sd = gains[d]
        if sd < CLAWFREE_CASE_GAIN[case]:
            out.append(("case_decrease", f"{case} v={d} s={sd}"))
        if after.is_over:
            if sd < 40:
                out.append(("pair_decrease_at_least_80", f"final {case} s={sd} < 40"))
        else:
            f_after = potential(profile, after)
            worst = min(f_after - potential(profile, after.apply(r)) for r in bits(after.legal_moves()))
            if sd + worst < 80:
                out.append(("pair_decrease_at_least_80", f"{case} v={d}: {sd}+{worst} < 80"))
    return out


__all__ = [
    "AuditReport",
    "ClaimVerdict",
    "MoveRecord",
    "RandomAuditSummary",
    "audit_claims",
    "policy_bound",
    "q_blocks",
    "random_state_audit",
    "resolve_profile",
    "simulate",
]
