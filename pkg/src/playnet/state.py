"""Pitch geometry and the match snapshot the estimators consume.

Coordinates are meters with the origin at the team's own left corner:
x runs 0..length toward the goal the team attacks, y runs 0..width.
Both sides field exactly eleven players. A team player may be flagged
"outside" (off the pitch: injured, sent off, retrieving the ball);
outside players are exempt from the bounds check and are never eligible
pass receivers. The opponent list is positional only; opposing shirt
numbers never matter to the model.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

from .network import PLAYER_IDS, TEAM_SIZE, check_player_id

XY = tuple[float, float]


@dataclass(frozen=True)
class Pitch:
    """Playing surface; the team in possession attacks toward x = length."""

    length: float = 105.0
    width: float = 68.0

    def __post_init__(self) -> None:
        for name in ("length", "width"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not v > 0:
                raise ValueError(f"pitch {name}={v!r} must be > 0")
            object.__setattr__(self, name, float(v))

    @property
    def goal_center(self) -> XY:
        return (self.length, self.width / 2.0)


def _check_xy(value: object, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{name}={value!r} must be a number")
    if not math.isfinite(value):
        raise ValueError(f"{name}={value} is not finite")
    return float(value)


@dataclass(frozen=True)
class MatchState:
    """Both teams' positions plus the ball holder, validated on construction."""

    pitch: Pitch
    team: dict[int, XY]           # player id -> (x, y)
    opponents: tuple[XY, ...]     # 11 positions, defending the x = length goal
    holder: int
    outside: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if set(self.team) != PLAYER_IDS:
            raise ValueError(f"team must cover exactly the ids 1..{TEAM_SIZE}")
        if len(self.opponents) != TEAM_SIZE:
            raise ValueError(f"opponents must have exactly {TEAM_SIZE} entries")
        for j in self.outside:
            check_player_id(j, "outside id")
        team: dict[int, XY] = {}
        for j in sorted(self.team):
            x, y = self.team[j]
            x = _check_xy(x, f"team player {j} x")
            y = _check_xy(y, f"team player {j} y")
            if j not in self.outside and not self._on_pitch(x, y):
                raise ValueError(
                    f"team player {j} at ({x}, {y}) is off the pitch and not flagged outside"
                )
            team[j] = (x, y)
        object.__setattr__(self, "team", team)
        opponents = []
        for k, (x, y) in enumerate(self.opponents):
            x = _check_xy(x, f"opponent {k} x")
            y = _check_xy(y, f"opponent {k} y")
            if not self._on_pitch(x, y):
                raise ValueError(f"opponent {k} at ({x}, {y}) is off the pitch")
            opponents.append((x, y))
        object.__setattr__(self, "opponents", tuple(opponents))
        check_player_id(self.holder, "holder")
        if self.holder in self.outside:
            raise ValueError(f"holder {self.holder} cannot be flagged outside")

    def _on_pitch(self, x: float, y: float) -> bool:
        return 0.0 <= x <= self.pitch.length and 0.0 <= y <= self.pitch.width

    @property
    def holder_position(self) -> XY:
        return self.team[self.holder]

    def with_holder(self, j: int) -> MatchState:
        """Same snapshot with the ball at teammate j's feet."""
        return replace(self, holder=j)

    def teammates(self) -> list[int]:
        return [j for j in sorted(self.team) if j != self.holder]


_REQUIRED_KEYS = ("pitch", "team", "opponents", "holder")


def _require_number(obj: dict, key: str, path: str) -> float:
    if key not in obj:
        raise ValueError(f"{path}.{key}: missing")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ValueError(f"{path}.{key}: expected a number, got {v!r}")
    return float(v)


def parse_match_state(data: bytes | str) -> MatchState:
    """Parse and fully validate the match-state JSON document.

    The first violated constraint is reported with its JSON path, e.g.
    "team[3].x: 120.0 outside [0, 105]".
    """

    def _reject_constant(name: str) -> None:
        raise ValueError(f"non-finite number {name} is not allowed")

    try:
        obj = json.loads(data, parse_constant=_reject_constant)
    except json.JSONDecodeError as err:
        raise ValueError(f"invalid JSON: {err}") from None
    if not isinstance(obj, dict):
        raise ValueError("root: expected a JSON object")
    for key in _REQUIRED_KEYS:
        if key not in obj:
            raise ValueError(f"{key}: missing")
    for key in obj:
        if key not in _REQUIRED_KEYS:
            raise ValueError(f"root: unexpected key {key!r}")

    pitch_obj = obj["pitch"]
    if not isinstance(pitch_obj, dict):
        raise ValueError("pitch: expected an object")
    for key in pitch_obj:
        if key not in ("length", "width"):
            raise ValueError(f"pitch: unexpected key {key!r}")
    length = _require_number(pitch_obj, "length", "pitch")
    width = _require_number(pitch_obj, "width", "pitch")
    if not length > 0:
        raise ValueError(f"pitch.length: {length} must be > 0")
    if not width > 0:
        raise ValueError(f"pitch.width: {width} must be > 0")
    pitch = Pitch(length, width)

    team_arr = obj["team"]
    if not isinstance(team_arr, list):
        raise ValueError("team: expected an array")
    if len(team_arr) != TEAM_SIZE:
        raise ValueError(f"team: expected {TEAM_SIZE} players, got {len(team_arr)}")
    team: dict[int, XY] = {}
    outside: set[int] = set()
    for k, entry in enumerate(team_arr):
        path = f"team[{k}]"
        if not isinstance(entry, dict):
            raise ValueError(f"{path}: expected an object")
        for key in entry:
            if key not in ("id", "x", "y", "outside"):
                raise ValueError(f"{path}: unexpected key {key!r}")
        if "id" not in entry:
            raise ValueError(f"{path}.id: missing")
        pid = entry["id"]
        if isinstance(pid, bool) or not isinstance(pid, int) or not 1 <= pid <= TEAM_SIZE:
            raise ValueError(f"{path}.id: {pid!r} must be an integer in 1..{TEAM_SIZE}")
        if pid in team:
            raise ValueError(f"{path}.id: duplicate player id {pid}")
        x = _require_number(entry, "x", path)
        y = _require_number(entry, "y", path)
        is_outside = entry.get("outside", False)
        if not isinstance(is_outside, bool):
            raise ValueError(f"{path}.outside: expected a boolean, got {is_outside!r}")
        if not is_outside:
            if not 0.0 <= x <= length:
                raise ValueError(f"{path}.x: {x} outside [0, {pitch.length:g}]")
            if not 0.0 <= y <= width:
                raise ValueError(f"{path}.y: {y} outside [0, {pitch.width:g}]")
        team[pid] = (x, y)
        if is_outside:
            outside.add(pid)

    opp_arr = obj["opponents"]
    if not isinstance(opp_arr, list):
        raise ValueError("opponents: expected an array")
    if len(opp_arr) != TEAM_SIZE:
        raise ValueError(f"opponents: expected {TEAM_SIZE} entries, got {len(opp_arr)}")
    opponents: list[XY] = []
    for k, entry in enumerate(opp_arr):
        path = f"opponents[{k}]"
        if not isinstance(entry, dict):
            raise ValueError(f"{path}: expected an object")
        for key in entry:
            if key not in ("x", "y"):
                raise ValueError(f"{path}: unexpected key {key!r}")
        x = _require_number(entry, "x", path)
        y = _require_number(entry, "y", path)
        if not 0.0 <= x <= length:
            raise ValueError(f"{path}.x: {x} outside [0, {pitch.length:g}]")
        if not 0.0 <= y <= width:
            raise ValueError(f"{path}.y: {y} outside [0, {pitch.width:g}]")
        opponents.append((x, y))

    holder = obj["holder"]
    if isinstance(holder, bool) or not isinstance(holder, int):
        raise ValueError(f"holder: {holder!r} must be an integer player id")
    if holder not in team:
        raise ValueError(f"holder: no team player with id {holder}")
    if holder in outside:
        raise ValueError(f"holder: player {holder} is flagged outside")

    return MatchState(pitch, team, tuple(opponents), holder, frozenset(outside))


def match_state_to_obj(state: MatchState) -> dict:
    """Canonical JSON shape: fixed field order, team sorted by id."""
    team = []
    for j in sorted(state.team):
        x, y = state.team[j]
        entry: dict = {"id": j, "x": x, "y": y}
        if j in state.outside:
            entry["outside"] = True
        team.append(entry)
    return {
        "pitch": {"length": state.pitch.length, "width": state.pitch.width},
        "team": team,
        "opponents": [{"x": x, "y": y} for x, y in state.opponents],
        "holder": state.holder,
    }


def load_match_state(path) -> MatchState:
    with open(path, "rb") as fh:
        return parse_match_state(fh.read())
