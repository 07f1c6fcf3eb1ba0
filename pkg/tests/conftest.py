import random
from pathlib import Path

import pytest

from playnet import (
    Decision,
    DecisionNetwork,
    MatchState,
    Pitch,
    PossessionSequence,
    PossessionStep,
    StepOutcome,
    build_network,
)
from playnet.state import load_match_state

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def midfield_state_path() -> Path:
    return DATA_DIR / "midfield_state.json"


@pytest.fixture(scope="session")
def box_state_path() -> Path:
    return DATA_DIR / "box_state.json"


@pytest.fixture(scope="session")
def midfield_state(midfield_state_path) -> MatchState:
    return load_match_state(midfield_state_path)


@pytest.fixture(scope="session")
def box_state(box_state_path) -> MatchState:
    return load_match_state(box_state_path)


def random_network(rng: random.Random, s: float | None = None, tau: float | None = None) -> DecisionNetwork:
    """A structurally valid network with random values."""
    holder = rng.randint(1, 11)
    s = rng.random() if s is None else s
    tau = rng.uniform(0.0, 4.0) if tau is None else tau
    per = {
        j: (rng.random(), rng.randint(0, 10))
        for j in range(1, 12)
        if j != holder
    }
    return build_network(holder, s, tau, per)


def network_with_holder(rng: random.Random, holder: int) -> DecisionNetwork:
    per = {j: (rng.random(), rng.randint(0, 10)) for j in range(1, 12) if j != holder}
    return build_network(holder, rng.random(), rng.uniform(0.0, 4.0), per)


def random_sequence(rng: random.Random, max_len: int = 30) -> PossessionSequence:
    """A valid possession chain of random networks, decisions, and outcomes."""
    length = rng.randint(1, max_len)
    steps = []
    holder = rng.randint(1, 11)
    for k in range(length):
        net = network_with_holder(rng, holder)
        final = k == length - 1
        if final and rng.random() < 0.4:
            decision = Decision(action="shoot")
            outcome = StepOutcome("shot_taken", scored=rng.random() < 0.5)
        else:
            target = rng.choice([j for j in range(1, 12) if j != holder])
            decision = Decision(action="pass", target=target, score=rng.random())
            if final:
                outcome = StepOutcome(rng.choice(["pass_intercepted", "forced_loss"]))
            else:
                outcome = StepOutcome("pass_completed")
                holder = target
        steps.append(PossessionStep(net, decision, outcome))
    return PossessionSequence(tuple(steps))


def random_match_state(rng: random.Random, allow_outside: bool = True) -> MatchState:
    """A valid random snapshot: positions anywhere on the pitch, occasional outside flags."""
    pitch = Pitch()
    outside = set()
    team = {}
    for j in range(1, 12):
        if allow_outside and rng.random() < 0.03:
            outside.add(j)
            team[j] = (rng.uniform(-5.0, 110.0), rng.uniform(-5.0, 73.0))
        else:
            team[j] = (rng.uniform(0.0, pitch.length), rng.uniform(0.0, pitch.width))
    opponents = tuple(
        (rng.uniform(0.0, pitch.length), rng.uniform(0.0, pitch.width)) for _ in range(11)
    )
    holder = rng.choice([j for j in range(1, 12) if j not in outside])
    return MatchState(pitch, team, opponents, holder, frozenset(outside))
