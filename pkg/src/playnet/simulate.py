"""Stochastic possession rollout and seeded Monte Carlo style comparison.

A rollout repeatedly estimates the holder's network, applies the policy,
and samples the chancy part: a shot scores with probability s, a pass
completes with probability p. A completed pass moves the ball to the
receiver and nudges everyone else (attackers two meters toward the
goal, defenders two meters toward the ball) so consecutive networks
differ without any physics engine. Interceptions end the possession;
degenerate passes (nothing worth passing to) and the step cap end it as
a forced loss.

Reproducibility contract: every random draw comes from one generator
seeded by the config, at most one draw per step (the shot or the pass),
and per-trial seeds are derived with SHA-256 from (base seed, style
index, trial index), so any single trial can be replayed in isolation
and results never depend on execution order or thread count.
"""

from __future__ import annotations

import hashlib
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .decision import DecisionPolicy, decide
from .estimators import EstimatorSuite, estimate_network
from .sequence import PossessionSequence, PossessionStep, StepOutcome
from .state import MatchState


@dataclass(frozen=True)
class SimulationConfig:
    """Everything a rollout needs besides the match state."""

    policy: DecisionPolicy
    estimators: EstimatorSuite
    max_steps: int = 30
    seed: int = 0
    drift_m: float = 2.0  # per-pass movement of non-receiving players

    def __post_init__(self) -> None:
        if isinstance(self.max_steps, bool) or not isinstance(self.max_steps, int) or self.max_steps < 1:
            raise ValueError(f"max_steps={self.max_steps!r} must be an integer >= 1")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ValueError(f"seed={self.seed!r} must be an integer")
        if isinstance(self.drift_m, bool) or not isinstance(self.drift_m, (int, float)) or self.drift_m < 0:
            raise ValueError(f"drift_m={self.drift_m!r} must be >= 0")


@dataclass(frozen=True)
class RolloutResult:
    """A finished possession plus the metrics maintained during the rollout."""

    sequence: PossessionSequence
    efficiency: float
    security: float
    scored: bool


def derive_seed(base_seed: int, style_index: int, trial_index: int) -> int:
    """Stable 64-bit per-trial seed; identical on every platform and run."""
    msg = f"{base_seed}:{style_index}:{trial_index}".encode("ascii")
    return int.from_bytes(hashlib.sha256(msg).digest()[:8], "big")


def _step_toward(x: float, y: float, tx: float, ty: float, dist: float) -> tuple[float, float]:
    dx = tx - x
    dy = ty - y
    d = math.hypot(dx, dy)
    if d <= dist:
        return (tx, ty)
    f = dist / d
    return (x + f * dx, y + f * dy)


def advance_state(state: MatchState, receiver: int, drift_m: float) -> MatchState:
    """The snapshot after a completed pass to the receiver.

    The receiver keeps their position and the ball. Other teammates
    drift toward the goal center, opponents toward the ball, all capped
    at drift_m and clipped to the pitch. Outside players stay outside.
    """
    length = state.pitch.length
    width = state.pitch.width
    gx, gy = state.pitch.goal_center
    bx, by = state.team[receiver]
    team: dict[int, tuple[float, float]] = {}
    for j, (x, y) in state.team.items():
        if j == receiver or j in state.outside:
            team[j] = (x, y)
        else:
            nx, ny = _step_toward(x, y, gx, gy, drift_m)
            team[j] = (min(length, max(0.0, nx)), min(width, max(0.0, ny)))
    opponents = []
    for x, y in state.opponents:
        nx, ny = _step_toward(x, y, bx, by, drift_m)
        opponents.append((min(length, max(0.0, nx)), min(width, max(0.0, ny))))
    return MatchState(state.pitch, team, tuple(opponents), receiver, state.outside)


def rollout(state: MatchState, cfg: SimulationConfig) -> RolloutResult:
    """Play out one possession; deterministic given (state, cfg)."""
    rng = random.Random(cfg.seed)
    steps: list[PossessionStep] = []
    eff = 0.0
    sec = 1.0
    current = state
    for k in range(cfg.max_steps):
        network = estimate_network(current, cfg.estimators)
        decision = decide(network, cfg.policy)
        if network.s > eff:
            eff = network.s
        if decision.is_shoot:
            scored = rng.random() < network.s
            steps.append(PossessionStep(network, decision, StepOutcome("shot_taken", scored=scored)))
            break
        p = network.edge(decision.target).p
        if p < sec:
            sec = p
        if decision.degenerate or k == cfg.max_steps - 1:
            steps.append(PossessionStep(network, decision, StepOutcome("forced_loss")))
            break
        if rng.random() < p:
            steps.append(PossessionStep(network, decision, StepOutcome("pass_completed")))
            current = advance_state(current, decision.target, cfg.drift_m)
        else:
            steps.append(PossessionStep(network, decision, StepOutcome("pass_intercepted")))
            break
    sequence = PossessionSequence(tuple(steps))
    return RolloutResult(sequence, eff, sec, sequence.scored)


def simulate_possession(state: MatchState, cfg: SimulationConfig) -> PossessionSequence:
    """One full possession from the given snapshot."""
    return rollout(state, cfg).sequence


def run_trials(
    state: MatchState,
    cfg: SimulationConfig,
    style_index: int,
    trials: int,
    threads: int = 1,
) -> list[RolloutResult]:
    """Independent seeded rollouts; output order is always trial order."""
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise ValueError(f"trials={trials!r} must be an integer >= 1")
    if isinstance(threads, bool) or not isinstance(threads, int) or threads < 1:
        raise ValueError(f"threads={threads!r} must be an integer >= 1")

    def one(trial_index: int) -> RolloutResult:
        trial_cfg = replace(cfg, seed=derive_seed(cfg.seed, style_index, trial_index))
        return rollout(state, trial_cfg)

    if threads == 1:
        return [one(i) for i in range(trials)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(one, range(trials)))


@dataclass(frozen=True)
class StyleReport:
    """Aggregates of one style's trials; sums taken in fixed trial order."""

    style: str
    trials: int
    mean_efficiency: float
    mean_security: float
    goal_rate: float
    mean_length: float


def monte_carlo_compare(
    state: MatchState,
    styles,
    trials: int,
    cfg: SimulationConfig,
    threads: int = 1,
) -> list[StyleReport]:
    """Trial the same snapshot under each style and aggregate the outcomes.

    Seeds depend on the style's position in the list, never on its
    value, so the report for styles[0] is identical no matter what
    follows it.
    """
    styles = list(styles)
    if not styles:
        raise ValueError("monte_carlo_compare requires at least one style")
    reports = []
    for style_index, style in enumerate(styles):
        style_cfg = replace(cfg, policy=replace(cfg.policy, style=style))
        results = run_trials(state, style_cfg, style_index, trials, threads=threads)
        n = float(trials)
        reports.append(
            StyleReport(
                style=str(style),
                trials=trials,
                mean_efficiency=sum(r.efficiency for r in results) / n,
                mean_security=sum(r.security for r in results) / n,
                goal_rate=sum(1 for r in results if r.scored) / n,
                mean_length=sum(len(r.sequence) for r in results) / n,
            )
        )
    return reports
