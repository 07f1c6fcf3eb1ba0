"""Game-style scoring of pass options.

A style ranks a candidate pass by combining its completion probability p
(scaled to 0..10) with the receiver risk r (already 0..10):

    score = x * 10p + y * r

for nonnegative integer weights (x, y), not both zero. The weight ratio
is the coach's statement of intent: x > y keeps the ball (possession
style), x < y chases danger (direct style), x = y is balanced.

Any callable (p, r) -> float can serve as a style wherever one is
accepted; only the linear family ships.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .network import RISK_MAX


class StyleClass(enum.Enum):
    POSSESSION = "possession"
    DIRECT = "direct"
    BALANCED = "balanced"


def _check_weight(value: object, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"style weight {name}={value!r} must be a nonnegative integer")
    if value < 0:
        raise ValueError(f"style weight {name}={value} must be >= 0")
    return value


@dataclass(frozen=True)
class LinearStyle:
    """Linear pass-scoring rule with pass weight x and risk weight y."""

    x: int
    y: int

    def __post_init__(self) -> None:
        _check_weight(self.x, "x")
        _check_weight(self.y, "y")
        if self.x + self.y == 0:
            raise ValueError("style weights x and y cannot both be zero")

    def evaluate(self, p: float, r: int) -> float:
        """Score one pass option: x * 10p + y * r."""
        if isinstance(p, bool) or not isinstance(p, (int, float)) or math.isnan(p) or not 0.0 <= p <= 1.0:
            raise ValueError(f"p={p!r} outside [0, 1]")
        if isinstance(r, bool) or not isinstance(r, int) or not 0 <= r <= RISK_MAX:
            raise ValueError(f"r={r!r} must be an integer in 0..{RISK_MAX}")
        return self.x * (10.0 * p) + self.y * r

    # a LinearStyle is itself a style callable
    __call__ = evaluate

    def importance(self) -> tuple[float, float]:
        """Relative weight of (p, r) in this style; the pair sums to 1."""
        total = self.x + self.y
        return (self.x / total, self.y / total)

    def classify(self) -> StyleClass:
        if self.x > self.y:
            return StyleClass.POSSESSION
        if self.x < self.y:
            return StyleClass.DIRECT
        return StyleClass.BALANCED

    @classmethod
    def parse(cls, text: str) -> LinearStyle:
        """Parse the "x:y" notation used on the command line and in config."""
        parts = text.split(":")
        if len(parts) != 2:
            raise ValueError(f"style {text!r} must look like 'x:y', e.g. '3:1'")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"style {text!r} must use integer weights") from None
        if x < 0 or y < 0:
            raise ValueError(f"style {text!r} must not use negative weights")
        if x == 0 and y == 0:
            raise ValueError("style '0:0' has no weight")
        return cls(x, y)

    def __str__(self) -> str:
        return f"{self.x}:{self.y}"
