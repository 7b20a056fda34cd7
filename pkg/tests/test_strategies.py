from __future__ import annotations

import json
import random
from collections import defaultdict

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import DATA
from domgame.edge_game import initial_edge_state
from domgame.game import GameSolver, Player, ResidualState
from domgame.graph import (
    bits,
    complete_graph,
    cycle_graph,
    is_connected,
    min_degree,
    prism_graph,
    star_graph,
)
from domgame.graph6 import read_graph6_file
from domgame.recognizers import find_edge_dominating_circuit, is_claw_free
from domgame.strategies import (
    ClawFree2Policy,
    CubicPolicy,
    EdgeCircuitPolicy,
    HypothesisError,
    PhasedState,
    PotentialProfile,
    ProfileMismatch,
    audit_claims,
    classify_clawfree2_case,
    classify_cubic_case,
    move_gain,
    potential,
    q_blocks,
    random_state_audit,
    simulate,
)
from domgame.strategies.audit import CLAWFREE_CASE_GAIN, CUBIC_CASE_GAIN, clique_white_neighbourhoods
from domgame.strategies.policies import in_endgame_position

CUBIC = PotentialProfile.cubic()
CLAW = PotentialProfile.claw_free_min_deg2()

CUBIC_CORPUS = [
    g
    for n in (4, 6, 8, 10, 12)
    for g in read_graph6_file(DATA / f"cubic_connected_n{n}.g6")
    if is_claw_free(g)
]
CLAW_CORPUS = [
    g
    for n in range(3, 8)
    for g in read_graph6_file(DATA / f"graphs_n{n}.g6")
    if is_connected(g) and min_degree(g) >= 2 and is_claw_free(g)
]


def _random_walk(rng, state):
    out = [state]
    while not state.is_over:
        state = state.apply(rng.choice(list(bits(state.legal_moves()))))
        out.append(state)
    return out


class TestPotentials:
    def test_initial_values(self):
        assert potential(CUBIC, ResidualState(complete_graph(4), 0)) == 12
        c5 = cycle_graph(5)
        circuit = PotentialProfile.edge_circuit(find_edge_dominating_circuit(c5))
        assert potential(circuit, initial_edge_state(c5)) == 10
        assert potential(CLAW, PhasedState.initial(c5)) == 110

    def test_gains(self):
        assert all(move_gain(CUBIC, ResidualState(complete_graph(4), 0), v) == 12 for v in range(4))
        assert all(move_gain(CUBIC, ResidualState(cycle_graph(5), 0), v) == 7 for v in range(5))
        c5 = cycle_graph(5)
        circuit = PotentialProfile.edge_circuit(find_edge_dominating_circuit(c5))
        assert move_gain(circuit, initial_edge_state(c5), 0) == 4

    def test_kind_mismatch(self):
        with pytest.raises(ProfileMismatch):
            potential(CUBIC, initial_edge_state(cycle_graph(5)))
        rep = simulate(complete_graph(4), "cubic")
        with pytest.raises(ProfileMismatch):
            audit_claims(rep, CLAW)

    def test_phase_tags(self):
        c5 = cycle_graph(5)
        s = PhasedState.initial(c5).at_turn()
        assert s.phase2  # max white degree is 2 from the start
        s = s.apply(0).at_turn()
        plus, minus = s.blue_split()
        assert plus == 0 and minus == 0b10010


class TestCubicPolicy:
    def test_classify_examples(self):
        assert classify_cubic_case(ResidualState(complete_graph(4), 0)).case == "C1"
        assert classify_cubic_case(ResidualState(prism_graph(), 0)).case == "C1"
        assert classify_cubic_case(ResidualState(complete_graph(4), 0b1111)).case == "Done"

    def test_k4_game(self):
        policy = CubicPolicy(complete_graph(4))
        assert policy.choose(ResidualState(complete_graph(4), 0)) == 0
        assert simulate(complete_graph(4), "cubic").length == 1

    def test_case_gains_in_random_states(self):
        rng = random.Random(3)
        seen = defaultdict(set)
        for _ in range(600):
            g = rng.choice(CUBIC_CORPUS)
            for s in _random_walk(rng, ResidualState(g, 0))[:-1]:
                c = classify_cubic_case(s)
                gain = move_gain(CUBIC, s, c.move)
                seen[c.case].add(gain)
                assert gain >= CUBIC_CASE_GAIN[c.case], (c, s)
        assert set(seen) == {f"C{i}" for i in range(1, 8)}
        assert seen["C7"] == {6}
        assert min(seen["C1"]) >= 9

    def test_rejects_non_cubic(self):
        with pytest.raises(HypothesisError):
            simulate(cycle_graph(5), "cubic")


class TestEdgePolicy:
    def test_c5(self):
        c5 = cycle_graph(5)
        profile = PotentialProfile.edge_circuit(find_edge_dominating_circuit(c5))
        s = initial_edge_state(c5)
        assert EdgeCircuitPolicy(c5, profile).choose(s) == 0
        rep = simulate(c5, profile)
        assert rep.length <= 3 and rep.verdict

    def test_k4_triangle_circuit(self):
        k4 = complete_graph(4)
        circuit = find_edge_dominating_circuit(k4)
        profile = PotentialProfile.edge_circuit(circuit)
        s = initial_edge_state(k4)
        e = EdgeCircuitPolicy(k4, profile).choose(s)
        gains = {f: move_gain(profile, s, f) for f in range(k4.m)}
        best = max(gains.values())
        assert gains[e] == best and e == min(f for f, x in gains.items() if x == best)
        assert any(gains[f] == best for f in bits(circuit.edge_set))

    def test_last_white_edge(self):
        c6 = cycle_graph(6)
        profile = PotentialProfile.edge_circuit(find_edge_dominating_circuit(c6))
        s = initial_edge_state(c6, predominated=c6.all_edges & ~(1 << 2))
        for e in bits(s.legal_moves()):
            assert move_gain(profile, s, e) >= 2

    def test_no_circuit(self):
        with pytest.raises(ProfileMismatch):
            simulate(star_graph(3), "edge-circuit")


class TestClawFreePolicy:
    def test_c7_is_endgame(self):
        c7 = cycle_graph(7)
        assert in_endgame_position(PhasedState.initial(c7).at_turn())
        rep = simulate(c7, "clawfree2")
        assert rep.length <= 4
        assert rep.moves[0].case == "E"

    def test_case_gains_in_random_states(self):
        rng = random.Random(5)
        seen = defaultdict(int)
        for _ in range(600):
            g = rng.choice(CLAW_CORPUS)
            for s in _random_walk(rng, PhasedState.initial(g))[:-1]:
                if s.mover is not Player.DOMINATOR:
                    continue
                s = s.at_turn()
                if in_endgame_position(s):
                    continue
                case, v = classify_clawfree2_case(s)
                seen[case] += 1
                assert move_gain(CLAW, s, v) >= CLAWFREE_CASE_GAIN[case], (case, s)
        assert set(seen) == {f"D{i}" for i in range(1, 6)}
        assert CLAWFREE_CASE_GAIN["D1"] == 58 and CLAWFREE_CASE_GAIN["D3"] == 62

    def test_c9_length(self):
        rep = simulate(cycle_graph(9), "clawfree2")
        assert rep.length <= 5 and rep.verdict

    def test_rejects_claws(self):
        with pytest.raises(HypothesisError):
            ClawFree2Policy(star_graph(3))


class TestSimulateAndAudit:
    def test_k4_trace(self):
        rep = simulate(complete_graph(4), "cubic")
        assert sum(rep.gains) == 12 and rep.length == 1
        assert all(c.passed for c in rep.claims)

    def test_prism_staller_gains(self):
        rep = simulate(prism_graph(), "cubic", "exact")
        staller = [m.gain for m in rep.moves if m.player is Player.STALLER]
        assert all(s >= 3 for s in staller)
        assert rep.verdict

    def test_c5_endgame_ledger(self):
        rep = simulate(cycle_graph(5), "clawfree2")
        names = {c.name: c.passed for c in rep.claims}
        assert names["endgame_ledger"]
        assert rep.verdict

    def test_json_schema(self):
        rep = simulate(prism_graph(), "cubic", "random", seed=4)
        data = json.loads(json.dumps(rep.to_json()))
        for key in ("graph6", "profile", "moves", "s", "claims", "bound", "verdict"):
            assert key in data
        assert data["s"] == rep.gains

    def test_deterministic_given_seed(self):
        a = simulate(cycle_graph(8), "clawfree2", "random", seed=11).to_json()
        b = simulate(cycle_graph(8), "clawfree2", "random", seed=11).to_json()
        assert a == b

    def test_staller_start_cubic_only(self):
        rep = simulate(prism_graph(), "cubic", start=Player.STALLER)
        assert rep.length <= 2
        with pytest.raises(ProfileMismatch):
            simulate(cycle_graph(5), "clawfree2", start=Player.STALLER)

    def test_q_blocks(self):
        assert q_blocks([6, 6]) is not None
        assert q_blocks([3]) is None
        assert q_blocks([]) == []


@given(st.integers(0, len(CUBIC_CORPUS) - 1), st.sampled_from(["exact", "greedy", "random"]), st.integers(0, 99))
@settings(max_examples=40)
def test_cubic_policy_sound(i, staller, seed):
    g = CUBIC_CORPUS[i]
    rep = simulate(g, "cubic", staller, seed=seed)
    assert rep.verdict, rep.to_json()
    assert rep.length <= g.n // 2
    assert sum(rep.gains) == rep.initial_potential and rep.final_potential == 0
    if staller == "exact":
        assert GameSolver(g).value() <= rep.length


@given(st.integers(0, len(CUBIC_CORPUS) - 1), st.integers(0, 999))
@settings(max_examples=40)
def test_every_legal_cubic_move_gains_three(i, seed):
    g = CUBIC_CORPUS[i]
    rng = random.Random(seed)
    for s in _random_walk(rng, ResidualState(g, 0))[:-1]:
        assert all(move_gain(CUBIC, s, v) >= 3 for v in bits(s.legal_moves()))


@given(st.integers(0, len(CLAW_CORPUS) - 1), st.integers(0, 999))
@settings(max_examples=60)
def test_claw_free_structure_and_tags(i, seed):
    g = CLAW_CORPUS[i]
    rng = random.Random(seed)
    s = PhasedState.initial(g)
    entered_phase2 = False
    plus_before = 0
    while not s.is_over:
        s = s.at_turn()
        assert clique_white_neighbourhoods(s)
        plus, minus = s.blue_split()
        if not s.phase2:
            assert minus == 0
        if entered_phase2:
            assert plus & ~plus_before == 0  # no new plus tags
        if s.phase2 and not entered_phase2:
            entered_phase2 = True
        plus_before = plus
        for v in bits(s.legal_moves()):
            assert move_gain(CLAW, s, v) >= 0
        s = s.apply(rng.choice(list(bits(s.legal_moves()))))


@given(st.integers(0, len(CLAW_CORPUS) - 1), st.sampled_from(["exact", "greedy", "random"]), st.integers(0, 99))
@settings(max_examples=40)
def test_claw_free_policy_sound(i, staller, seed):
    g = CLAW_CORPUS[i]
    rep = simulate(g, "clawfree2", staller, seed=seed)
    assert rep.verdict, rep.to_json()
    assert sum(rep.gains) == rep.initial_potential


def test_random_state_audit_small():
    for kind, pool in (("cubic", CUBIC_CORPUS), ("clawfree2", CLAW_CORPUS), ("edge-circuit", CLAW_CORPUS)):
        summary = random_state_audit(kind, pool, 300, seed=2)
        assert summary.states == 300 and summary.passed, summary.failures[:3]
