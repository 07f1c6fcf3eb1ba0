"""Estimation of the four decision parameters from a match snapshot.

How s, tau, p and r should be measured is an open modeling question with
a literature of its own (shot models, pass-ability models, tracking
metrics). This module therefore exposes a pluggable suite of four pure
functions and ships closed-form geometric defaults that are bounded,
smooth, cheap, and monotone in the directions a coach would expect:

* score_prob      s    falls with distance to goal and with how far the
                       attack direction points away from the goal mouth;
* decision_time   tau  grows with the nearest opponent's distance
                       (pressure forces fast decisions), capped;
* pass_prob       p    falls with pass length, falls as opponents close
                       on the passing lane, grows with the time available;
* risk            r    blends the receiver's own scoring chance with how
                       unmarked the receiver is, rounded to 0..10.

Every constant lives in EstimatorParams and can be overridden from the
config file without touching code. Teammates who are offside or outside
the pitch are not estimated at all: their edge is zeroed through
mark_unavailable, the single choke point for unavailability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .network import DecisionNetwork, RISK_MAX, build_network
from .state import MatchState


@dataclass(frozen=True)
class EstimatorParams:
    """Constants of the default estimators (distances in meters, times in seconds)."""

    score_decay_m: float = 20.0        # e-folding distance of the scoring chance
    pressure_speed_mps: float = 5.0    # closing speed assumed for the nearest opponent
    time_cap_s: float = 4.0            # decision time is never above this
    pass_decay_m: float = 30.0         # e-folding distance of pass completion
    lane_half_width_m: float = 2.0     # logistic scale of lane contention
    pass_time_scale_s: float = 1.0     # time constant of the (1 - exp(-tau/scale)) factor
    openness_radius_m: float = 10.0    # distance at which a receiver counts as unmarked
    risk_score_weight: float = 0.7     # weight of the receiver's scoring chance in r
    risk_openness_weight: float = 0.3  # weight of the receiver's openness in r
    goal_width_m: float = 7.32         # goal mouth span, centered on y = width/2

    def __post_init__(self) -> None:
        for name in (
            "score_decay_m", "pressure_speed_mps", "time_cap_s", "pass_decay_m",
            "lane_half_width_m", "pass_time_scale_s", "openness_radius_m", "goal_width_m",
        ):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not v > 0:
                raise ValueError(f"estimator constant {name}={v!r} must be > 0")
            object.__setattr__(self, name, float(v))
        for name in ("risk_score_weight", "risk_openness_weight"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float)) or v < 0:
                raise ValueError(f"estimator constant {name}={v!r} must be >= 0")
            object.__setattr__(self, name, float(v))
        if self.risk_score_weight + self.risk_openness_weight > 1.0 + 1e-9:
            raise ValueError("risk weights must sum to at most 1 so r stays in 0..10")


DEFAULT_PARAMS = EstimatorParams()


@dataclass(frozen=True)
class EstimatorSuite:
    """Four pure functions producing (s, tau, p, r) for a match snapshot."""

    score_prob: Callable[[MatchState], float]
    decision_time: Callable[[MatchState], float]
    pass_prob: Callable[[MatchState, int, float], float]
    risk: Callable[[MatchState, int], int]


def _segment_distance(px: float, py: float, ax: float, ay: float, bx: float, by: float) -> float:
    """Distance from point (px, py) to the segment (ax, ay)-(bx, by)."""
    dx = bx - ax
    dy = by - ay
    norm2 = dx * dx + dy * dy
    if norm2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / norm2
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def _nearest_opponent_distance(state: MatchState, x: float, y: float) -> float:
    best = math.inf
    for ox, oy in state.opponents:
        d = math.hypot(ox - x, oy - y)
        if d < best:
            best = d
    return best


def score_prob_at(pitch, x: float, y: float, params: EstimatorParams = DEFAULT_PARAMS) -> float:
    """Scoring chance from position (x, y): exp(-d_goal/decay) * max(0, cos theta).

    theta is the turn from the attack direction (+x) to the nearest ray
    into the goal mouth: zero whenever shooting straight ahead reaches
    the mouth, otherwise the angle to the closer goalpost. Positions
    level with or behind the goal line see theta >= 90 degrees, so the
    cosine clips to zero. Along any fixed bearing the angle term is
    constant or shrinking with distance, which makes s decrease in
    d_goal by construction.
    """
    length = pitch.length
    gy = pitch.width / 2.0
    half = params.goal_width_m / 2.0
    d_goal = math.hypot(length - x, gy - y)
    if d_goal == 0.0:
        return 1.0
    if x < length and gy - half <= y <= gy + half:
        cos_theta = 1.0
    else:
        theta_low = abs(math.atan2(gy - half - y, length - x))
        theta_high = abs(math.atan2(gy + half - y, length - x))
        cos_theta = math.cos(min(theta_low, theta_high))
        if cos_theta < 0.0:
            cos_theta = 0.0
    s = math.exp(-d_goal / params.score_decay_m) * cos_theta
    return min(1.0, max(0.0, s))


def default_score_prob(state: MatchState, params: EstimatorParams = DEFAULT_PARAMS) -> float:
    """Scoring chance of the holder from where they stand (see score_prob_at)."""
    x, y = state.holder_position
    return score_prob_at(state.pitch, x, y, params)


def default_decision_time(state: MatchState, params: EstimatorParams = DEFAULT_PARAMS) -> float:
    """Seconds before pressure forces an action: nearest-opponent distance over speed, capped."""
    x, y = state.holder_position
    d = _nearest_opponent_distance(state, x, y)
    return min(d / params.pressure_speed_mps, params.time_cap_s)


def default_pass_prob(
    state: MatchState, target: int, tau: float, params: EstimatorParams = DEFAULT_PARAMS
) -> float:
    """Completion probability of a pass to the target teammate.

    exp(-d/decay) * lane_openness * (1 - exp(-tau/scale)), where
    lane_openness is the logistic of the clearest opponent's distance to
    the passing lane (an opponent standing on the lane halves it). With
    no time at all (tau = 0) no pass completes.
    """
    if target == state.holder:
        raise ValueError("pass target cannot be the holder")
    hx, hy = state.holder_position
    tx, ty = state.team[target]
    d = math.hypot(tx - hx, ty - hy)
    lane_clearance = math.inf
    for ox, oy in state.opponents:
        c = _segment_distance(ox, oy, hx, hy, tx, ty)
        if c < lane_clearance:
            lane_clearance = c
    lane_openness = 1.0 / (1.0 + math.exp(-lane_clearance / params.lane_half_width_m))
    p = (
        math.exp(-d / params.pass_decay_m)
        * lane_openness
        * (1.0 - math.exp(-tau / params.pass_time_scale_s))
    )
    return min(1.0, max(0.0, p))


def default_risk(state: MatchState, target: int, params: EstimatorParams = DEFAULT_PARAMS) -> int:
    """Receiver risk 0..10: how dangerous the ball at the target's feet would be.

    Blends the target's own scoring chance (were they the holder) with
    their openness (nearest-opponent distance, saturating at the
    openness radius), then rounds half-up to an integer.
    """
    if target == state.holder:
        raise ValueError("risk target cannot be the holder")
    tx, ty = state.team[target]
    # equals default_score_prob on the state with the ball moved to the target
    s_target = score_prob_at(state.pitch, tx, ty, params)
    openness = min(1.0, _nearest_opponent_distance(state, tx, ty) / params.openness_radius_m)
    raw = params.risk_score_weight * s_target + params.risk_openness_weight * openness
    raw = min(1.0, max(0.0, raw))
    return min(RISK_MAX, int(math.floor(raw * RISK_MAX + 0.5)))


def default_suite(params: EstimatorParams = DEFAULT_PARAMS) -> EstimatorSuite:
    """The shipped geometric estimators bound to one set of constants."""
    return EstimatorSuite(
        score_prob=lambda state: default_score_prob(state, params),
        decision_time=lambda state: default_decision_time(state, params),
        pass_prob=lambda state, target, tau: default_pass_prob(state, target, tau, params),
        risk=lambda state, target: default_risk(state, target, params),
    )


def second_last_opponent_x(state: MatchState) -> float:
    xs = sorted((pos[0] for pos in state.opponents), reverse=True)
    return xs[1]


def unavailable_teammates(state: MatchState) -> list[int]:
    """Teammates whose edge must be zeroed: flagged outside, or offside.

    Offside: strictly ahead of the ball and strictly ahead of the
    second-last opponent, measured along the attack direction at the
    moment the pass would be decided.
    """
    ball_x = state.holder_position[0]
    fence_x = second_last_opponent_x(state)
    out = []
    for j in state.teammates():
        if j in state.outside:
            out.append(j)
        else:
            x = state.team[j][0]
            if x > ball_x and x > fence_x:
                out.append(j)
    return out


def estimate_network(state: MatchState, est: EstimatorSuite) -> DecisionNetwork:
    """Build the holder's decision network from estimator outputs.

    Each output is bounds-checked here so a misbehaving estimator fails
    loudly by name instead of corrupting a network. Unavailable
    teammates (offside or outside) are never passed to the estimators;
    their edges are zeroed via mark_unavailable after assembly.
    """
    s = est.score_prob(state)
    if isinstance(s, bool) or not isinstance(s, (int, float)) or math.isnan(s) or not 0.0 <= s <= 1.0:
        raise ValueError(f"score_prob returned {s!r}, outside [0, 1]")
    tau = est.decision_time(state)
    if isinstance(tau, bool) or not isinstance(tau, (int, float)) or math.isnan(tau) or tau < 0.0:
        raise ValueError(f"decision_time returned {tau!r}, expected a number >= 0")
    unavailable = unavailable_teammates(state)
    blocked = set(unavailable)
    per_teammate: dict[int, tuple[float, int]] = {}
    for j in state.teammates():
        if j in blocked:
            per_teammate[j] = (0.0, 0)
            continue
        p = est.pass_prob(state, j, tau)
        if isinstance(p, bool) or not isinstance(p, (int, float)) or math.isnan(p) or not 0.0 <= p <= 1.0:
            raise ValueError(f"pass_prob returned {p!r} for teammate {j}, outside [0, 1]")
        r = est.risk(state, j)
        if isinstance(r, bool) or not isinstance(r, int) or not 0 <= r <= RISK_MAX:
            raise ValueError(f"risk returned {r!r} for teammate {j}, outside 0..{RISK_MAX}")
        per_teammate[j] = (p, r)
    network = build_network(state.holder, s, tau, per_teammate)
    for j in unavailable:
        network = network.mark_unavailable(j)
    return network
