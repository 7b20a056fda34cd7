"""Potential-function Dominator strategies, Staller models and claim audits."""

from .adversaries import STALLER_MODELS, ExactAdversary, GreedyMinGain, SeededRandom, make_staller
from .audit import (
    AuditReport,
    ClaimVerdict,
    MoveRecord,
    RandomAuditSummary,
    audit_claims,
    policy_bound,
    q_blocks,
    random_state_audit,
    resolve_profile,
    simulate,
)
from .policies import (
    ClawFree2Policy,
    CubicCase,
    CubicPolicy,
    EdgeCircuitPolicy,
    HypothesisError,
    classify_clawfree2_case,
    classify_cubic_case,
    make_policy,
)
from .potentials import (
    PhasedState,
    PotentialProfile,
    ProfileKind,
    ProfileMismatch,
    move_gain,
    potential,
)

__all__ = [
    "AuditReport",
    "ClaimVerdict",
    "ClawFree2Policy",
    "CubicCase",
    "CubicPolicy",
    "EdgeCircuitPolicy",
    "ExactAdversary",
    "GreedyMinGain",
    "HypothesisError",
    "MoveRecord",
    "PhasedState",
    "PotentialProfile",
    "ProfileKind",
    "ProfileMismatch",
    "RandomAuditSummary",
    "STALLER_MODELS",
    "SeededRandom",
    "audit_claims",
    "classify_clawfree2_case",
    "classify_cubic_case",
    "make_policy",
    "make_staller",
    "move_gain",
    "policy_bound",
    "potential",
    "q_blocks",
    "random_state_audit",
    "resolve_profile",
    "simulate",
]
