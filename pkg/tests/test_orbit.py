import math
from fractions import Fraction

import pytest

from modsurf.modular import IDENTITY, S, SubgroupSpec, T
from modsurf.orbit import (
    BallQuery,
    CapExceeded,
    enumerate_ball,
    enumerate_ball_bfs_oracle,
)
from modsurf.uhp import UHPoint, cosh2_distance, mobius_apply

FULL = SubgroupSpec.parse("full")
G2 = SubgroupSpec.parse("gamma:2")


def _ball_ok(elems, query):
    b2 = 2 * Fraction(query.threshold)
    for g in elems:
        v = cosh2_distance(query.center.to_exact(), mobius_apply(g, query.source.to_exact()))
        assert v <= b2


def test_threshold_one_gives_stabilizer():
    q = BallQuery(FULL, UHPoint(0, 1), UHPoint(0, 1), 1.0)
    elems = enumerate_ball(q)
    assert IDENTITY in elems
    assert S in elems  # i is the fixed point of S
    assert len(elems) == 2


def test_generic_point_trivial_stabilizer():
    q = BallQuery(FULL, UHPoint(0, 2), UHPoint(0, 2), 1.0)
    assert enumerate_ball(q) == [IDENTITY]


def test_translates_appear_at_right_radius():
    # d(2i, T 2i) has 2cosh = (1 + 4 + 4)/4 = 9/4
    q = BallQuery(FULL, UHPoint(0, 2), UHPoint(0, 2), 9 / 8)
    elems = enumerate_ball(q)
    assert T in elems and T.inverse() in elems
    _ball_ok(elems, q)


def test_subgroup_ball_is_subset():
    center, source = UHPoint(0, 2), UHPoint(Fraction(1, 3), Fraction(5, 4))
    h = math.cosh(3.0)
    full = set(enumerate_ball(BallQuery(FULL, center, source, h)))
    sub = set(enumerate_ball(BallQuery(G2, center, source, h)))
    assert sub <= full
    assert all(G2.is_member(g) for g in sub)


def test_against_bfs_oracle():
    for spec in (FULL, G2):
        for center, source in (
            (UHPoint(0, 2), UHPoint(0, 2)),
            (UHPoint(Fraction(1, 4), 1), UHPoint(Fraction(-1, 3), Fraction(3, 2))),
        ):
            q = BallQuery(spec, center, source, math.cosh(3.0))
            fast = set(enumerate_ball(q))
            slow = set(enumerate_ball_bfs_oracle(q, 24))
            assert fast == slow


def test_cap_exceeded():
    q = BallQuery(FULL, UHPoint(0, 2), UHPoint(0, 2), math.cosh(8.0))
    with pytest.raises(CapExceeded):
        enumerate_ball(q, cap=10)


def test_invalid_threshold():
    with pytest.raises(ValueError):
        BallQuery(FULL, UHPoint(0, 2), UHPoint(0, 2), 0.5)
