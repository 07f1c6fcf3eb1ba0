"""The shoot-or-pass decision over a holder's network.

Shoot when the holder's scoring probability reaches the policy
threshold; otherwise pass to the teammate whose (p, r) edge maximizes
the policy's style function. Ties at the argmax are broken by a
deterministic configurable rule (default: lowest teammate id) so runs
reproduce exactly across platforms.

The holder's decision time tau is carried by the network but plays no
role here; its influence is upstream, where pass probabilities are
estimated as a function of the time available.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .network import DecisionNetwork

TIE_BREAK_RULES: dict[str, Callable[[int], int]] = {
    "lowest_id": lambda j: j,
    "highest_id": lambda j: -j,
}


@dataclass(frozen=True)
class DecisionPolicy:
    """A style function, a shoot threshold, and an argmax tie-break rule."""

    style: Callable[[float, int], float]
    threshold: float = 0.5
    tie_break: str = "lowest_id"

    def __post_init__(self) -> None:
        if not callable(self.style):
            raise ValueError("policy style must be callable as style(p, r)")
        if not isinstance(self.threshold, (int, float)) or isinstance(self.threshold, bool):
            raise ValueError(f"threshold={self.threshold!r} must be a number in [0, 1]")
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold={self.threshold} outside [0, 1]")
        if self.tie_break not in TIE_BREAK_RULES:
            known = ", ".join(sorted(TIE_BREAK_RULES))
            raise ValueError(f"unknown tie_break {self.tie_break!r} (known: {known})")


@dataclass(frozen=True)
class Decision:
    """Outcome of the decision function: shoot, or pass to a teammate.

    degenerate marks a pass whose best style score is zero (for example
    every teammate offside); the simulator treats such forced passes as
    turnovers rather than guessing a receiver that cannot be reached.
    """

    action: str  # "shoot" | "pass"
    target: int | None = None
    score: float | None = None
    degenerate: bool = False

    def __post_init__(self) -> None:
        if self.action not in ("shoot", "pass"):
            raise ValueError(f"unknown decision action {self.action!r}")
        if self.action == "pass" and self.target is None:
            raise ValueError("pass decision requires a target")
        if self.action == "shoot" and self.target is not None:
            raise ValueError("shoot decision cannot carry a target")

    @property
    def is_shoot(self) -> bool:
        return self.action == "shoot"

    @property
    def is_pass(self) -> bool:
        return self.action == "pass"


def ranked_options(network: DecisionNetwork, policy: DecisionPolicy) -> list[tuple[int, float]]:
    """All ten pass options, best first.

    Sorted by style score descending; ties broken by the policy's rule.
    The head of this list is exactly the pass target decide() would pick.
    """
    tie_key = TIE_BREAK_RULES[policy.tie_break]
    style = policy.style
    scored = [(j, style(e.p, e.r)) for j, e in network.edges.items()]
    scored.sort(key=lambda item: (-item[1], tie_key(item[0])))
    return scored


def decide(network: DecisionNetwork, policy: DecisionPolicy) -> Decision:
    """Shoot if the holder's s reaches the threshold, else pass to the argmax teammate."""
    if network.s >= policy.threshold:
        return Decision(action="shoot")
    target, score = ranked_options(network, policy)[0]
    return Decision(action="pass", target=target, score=score, degenerate=(score == 0.0))
