import random

import pytest
from hypothesis import given, settings, strategies as st

from playnet import DecisionPolicy, LinearStyle, build_network, decide, ranked_options

from conftest import random_network
from oracles import best_pass_exhaustive, ranked_exhaustive


def uniform_network(holder=8, s=0.1, tau=1.0, p=0.4, r=3):
    per = {j: (p, r) for j in range(1, 12) if j != holder}
    return build_network(holder, s, tau, per)


def test_shoot_above_threshold():
    net = uniform_network(s=0.8)
    for threshold in (0.5, 0.8, 0.2, 0.0):
        decision = decide(net, DecisionPolicy(style=LinearStyle(1, 1), threshold=threshold))
        assert decision.is_shoot


def test_threshold_boundary_is_shoot():
    net = uniform_network(s=0.5)
    assert decide(net, DecisionPolicy(style=LinearStyle(1, 1), threshold=0.5)).is_shoot


def test_pass_below_threshold_lowest_id_tie():
    net = uniform_network(holder=8, s=0.1, p=0.4, r=3)
    decision = decide(net, DecisionPolicy(style=LinearStyle(1, 1), threshold=0.5))
    assert decision.is_pass
    assert decision.target == 1
    assert not decision.degenerate


def test_degenerate_iff_all_zero():
    zero = uniform_network(s=0.1, p=0.0, r=0)
    decision = decide(zero, DecisionPolicy(style=LinearStyle(1, 1), threshold=0.5))
    assert decision.is_pass and decision.degenerate and decision.target == 1
    nonzero = uniform_network(s=0.1, p=0.0, r=1)
    assert not decide(nonzero, DecisionPolicy(style=LinearStyle(1, 1), threshold=0.5)).degenerate


def test_highest_id_tie_break():
    net = uniform_network(holder=8, s=0.1, p=0.4, r=3)
    decision = decide(net, DecisionPolicy(style=LinearStyle(1, 1), threshold=0.5, tie_break="highest_id"))
    assert decision.target == 11


def test_ranked_all_zero_sorted_by_id():
    net = uniform_network(holder=8, s=0.1, p=0.0, r=0)
    ranked = ranked_options(net, DecisionPolicy(style=LinearStyle(1, 1)))
    assert [j for j, _ in ranked] == [j for j in range(1, 12) if j != 8]
    assert all(score == 0.0 for _, score in ranked)


def test_ranked_unique_maximum_first():
    per = {j: (0.0, 0) for j in range(1, 12) if j != 8}
    per[9] = (1.0, 10)
    net = build_network(8, 0.1, 1.0, per)
    style = LinearStyle(2, 3)
    ranked = ranked_options(net, DecisionPolicy(style=style))
    assert ranked[0] == (9, 10 * 2 + 10 * 3)


def test_pass_target_matches_exhaustive_scan():
    rng = random.Random(20260809)
    style = LinearStyle(2, 3)
    policy = DecisionPolicy(style=style, threshold=1.0)
    for _ in range(300):
        net = random_network(rng, s=rng.uniform(0.0, 0.99))
        decision = decide(net, policy)
        assert decision.is_pass
        target, score = best_pass_exhaustive(net, style)
        assert decision.target == target
        assert decision.score == score


def test_ranked_matches_exhaustive_ranking():
    rng = random.Random(99)
    for tie_break in ("lowest_id", "highest_id"):
        policy = DecisionPolicy(style=LinearStyle(1, 2), tie_break=tie_break)
        for _ in range(100):
            net = random_network(rng)
            assert ranked_options(net, policy) == ranked_exhaustive(net, LinearStyle(1, 2), tie_break)


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.sampled_from([2, 3, 10]))
def test_scale_invariance(seed, c):
    rng = random.Random(seed)
    net = random_network(rng)
    x, y = rng.randint(0, 9), rng.randint(0, 9)
    if x == 0 and y == 0:
        x = 1
    threshold = rng.random()
    base = decide(net, DecisionPolicy(style=LinearStyle(x, y), threshold=threshold))
    scaled = decide(net, DecisionPolicy(style=LinearStyle(c * x, c * y), threshold=threshold))
    assert base.action == scaled.action
    assert base.target == scaled.target
    assert base.degenerate == scaled.degenerate


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_threshold_monotonicity(seed):
    rng = random.Random(seed)
    net = random_network(rng)
    style = LinearStyle(1, 1)
    s = net.s
    if decide(net, DecisionPolicy(style=style, threshold=rng.random())).is_shoot:
        lower = rng.uniform(0.0, s)
        assert decide(net, DecisionPolicy(style=style, threshold=lower)).is_shoot
    if s < 1.0:
        above = rng.uniform(s, 1.0)
        if above > s:
            assert decide(net, DecisionPolicy(style=style, threshold=above)).is_pass


def test_offside_exclusion():
    rng = random.Random(4242)
    policy = DecisionPolicy(style=LinearStyle(2, 1), threshold=1.0)
    for _ in range(300):
        net = random_network(rng, s=0.3)
        blocked = rng.choice(net.teammates())
        net = net.mark_unavailable(blocked)
        others_positive = any(
            net.edge(j).p > 0 or net.edge(j).r > 0 for j in net.teammates() if j != blocked
        )
        decision = decide(net, policy)
        if others_positive:
            assert decision.target != blocked
        else:
            assert decision.degenerate


def test_decide_is_pure():
    rng = random.Random(7)
    net = random_network(rng)
    policy = DecisionPolicy(style=LinearStyle(3, 1), threshold=0.5)
    assert decide(net, policy) == decide(net, policy)
    assert ranked_options(net, policy) == ranked_options(net, policy)


def test_ranked_head_consistent_with_decide():
    rng = random.Random(11)
    policy = DecisionPolicy(style=LinearStyle(1, 4), threshold=0.6)
    for _ in range(200):
        net = random_network(rng)
        if net.s < policy.threshold:
            decision = decide(net, policy)
            assert ranked_options(net, policy)[0][0] == decision.target


def test_policy_validation():
    with pytest.raises(ValueError, match="threshold"):
        DecisionPolicy(style=LinearStyle(1, 1), threshold=1.5)
    with pytest.raises(ValueError, match="tie_break"):
        DecisionPolicy(style=LinearStyle(1, 1), tie_break="coin_flip")
    with pytest.raises(ValueError, match="callable"):
        DecisionPolicy(style="3:1")


def test_custom_style_callable():
    net = uniform_network(s=0.1, p=0.4, r=3)
    # risk-squared style: still just a callable (p, r) -> float
    decision = decide(net, DecisionPolicy(style=lambda p, r: 10 * p + r * r))
    assert decision.is_pass
