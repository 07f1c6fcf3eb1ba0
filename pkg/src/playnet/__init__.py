"""Decision networks, shoot-or-pass policies, and possession simulation."""

from .decision import Decision, DecisionPolicy, decide, ranked_options
from .estimators import (
    EstimatorParams,
    EstimatorSuite,
    default_decision_time,
    default_pass_prob,
    default_risk,
    default_score_prob,
    default_suite,
    estimate_network,
)
from .network import DecisionNetwork, EdgeVector4, VectorEdge, VectorNetwork, build_network
from .sequence import (
    PossessionSequence,
    PossessionStep,
    StepOutcome,
    efficiency,
    is_p_secure,
    is_s_efficient,
    pareto_frontier,
    rank_by_tradeoff,
    security,
)
from .simulate import (
    RolloutResult,
    SimulationConfig,
    StyleReport,
    derive_seed,
    monte_carlo_compare,
    rollout,
    run_trials,
    simulate_possession,
)
from .state import MatchState, Pitch, match_state_to_obj, parse_match_state
from .style import LinearStyle, StyleClass

__version__ = "0.1.0"

__all__ = [
    "Decision",
    "DecisionNetwork",
    "DecisionPolicy",
    "EdgeVector4",
    "EstimatorParams",
    "EstimatorSuite",
    "LinearStyle",
    "MatchState",
    "Pitch",
    "PossessionSequence",
    "PossessionStep",
    "RolloutResult",
    "SimulationConfig",
    "StepOutcome",
    "StyleClass",
    "StyleReport",
    "VectorEdge",
    "VectorNetwork",
    "build_network",
    "decide",
    "default_decision_time",
    "default_pass_prob",
    "default_risk",
    "default_score_prob",
    "default_suite",
    "derive_seed",
    "efficiency",
    "estimate_network",
    "is_p_secure",
    "is_s_efficient",
    "match_state_to_obj",
    "monte_carlo_compare",
    "pareto_frontier",
    "parse_match_state",
    "rank_by_tradeoff",
    "ranked_options",
    "rollout",
    "run_trials",
    "security",
    "simulate_possession",
    "__version__",
]
