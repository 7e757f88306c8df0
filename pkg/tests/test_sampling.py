import random

import pytest

from modsurf.domain import REGION_F, REGION_FU, reduce_to_F
from modsurf.modular import SubgroupSpec
from modsurf.sampling import sample_points, sample_region_point

FULL = SubgroupSpec.parse("full")
G2 = SubgroupSpec.parse("gamma:2")


def test_deterministic_per_seed():
    a = sample_points(FULL, 50, seed=9)
    b = sample_points(FULL, 50, seed=9)
    c = sample_points(FULL, 50, seed=10)
    assert a == b
    assert a != c


def test_single_point():
    pts = sample_points(FULL, 1, seed=0)
    assert len(pts) == 1


def test_grid_points_exact_and_in_domain():
    pts = sample_points(FULL, 200, seed=1)
    for p in pts:
        assert p.exact
        u, _ = reduce_to_F(p)
        assert REGION_F.contains(u)


def test_uniform_sampler_in_domain():
    pts = sample_points(FULL, 100, sampler="uniform", seed=2)
    for p in pts:
        u, _ = reduce_to_F(p.to_exact())
        assert REGION_F.contains(u)


def test_y_cap_respected():
    pts = sample_points(FULL, 300, seed=3, y_cap=5.0)
    for p in pts:
        u, _ = reduce_to_F(p)
        assert u.y <= 5


def test_subgroup_samples_cover_pieces():
    pts = sample_points(G2, 120, seed=4)
    assert len(pts) == 120
    for p in pts:
        assert p.exact


def test_region_point_membership():
    rng = random.Random(5)
    for _ in range(50):
        p = sample_region_point(REGION_FU, rng, grid_denominator=10**4)
        assert REGION_FU.contains(p)


def test_invalid_sampler():
    with pytest.raises(ValueError):
        sample_points(FULL, 5, sampler="bogus")
