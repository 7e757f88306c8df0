"""Acceptance suite: one test (and one printed pass/fail line) per criterion.

Tolerances are fixed here and must not be loosened:
  constants 1e-12 (closed forms), disc area 1e-6, piece-area sum 1e-9,
  counting identities exact (zero tolerance), experiment ratio floor 0.5,
  equilateral residual 1e-10.
"""

import math
import random
import time
from fractions import Fraction

from modsurf.covers import (
    BASE_FO,
    COVERING,
    cover_central_generic,
    cover_Fo,
    cover_Fu,
    fo_ball_threshold,
    verify_cover,
)
from modsurf.domain import REGION_FO, SubgroupDomain
from modsurf.experiment import ExperimentConfig, rows_to_csv, run_experiment
from modsurf.metrics import distance_stats, surface_cosh2_oracle
from modsurf.modular import SubgroupSpec
from modsurf.orbit import BallQuery, enumerate_ball, enumerate_ball_bfs_oracle
from modsurf.sampling import sample_points, sample_region_point
from modsurf.search import equilateral_search
from modsurf.uhp import UHPoint, cosh2_distance, disc_area, mobius_apply

FULL = SubgroupSpec.parse("full")
G2 = SubgroupSpec.parse("gamma:2")


def _report(num, label, t0):
    print("acceptance %d (%s): PASS in %.1fs" % (num, label, time.time() - t0))


def test_criterion_1_constants():
    t0 = time.time()
    rho = UHPoint(-0.5, math.sqrt(3) / 2)
    top = UHPoint(0.5, 2.0)
    assert abs(float(cosh2_distance(rho, top)) / 2 - 23 * math.sqrt(3) / 24) < 1e-12
    near_rho = UHPoint(0.5, math.sqrt(3) / 2)
    assert abs(float(cosh2_distance(UHPoint(0, 2), near_rho)) / 2
               - 5 * math.sqrt(3) / 6) < 1e-12
    assert abs(COVERING.area_fo - (math.pi / 3 - 0.5)) < 1e-12
    r = math.acosh(23 * math.sqrt(3) / 24) + 3 * math.acosh(5 * math.sqrt(3) / 6)
    assert abs(disc_area(r) - math.pi / 36 * (848 + 11 * math.sqrt(4381))) < 1e-6
    assert math.floor(COVERING.area_disc / COVERING.area_fo) <= 252
    _report(1, "constant reproduction", t0)


def test_criterion_2_gamma_o_enumeration():
    t0 = time.time()
    cover = cover_Fo(FULL)
    assert len(cover) <= 252
    q = BallQuery(FULL, BASE_FO, BASE_FO, fo_ball_threshold())
    oracle = enumerate_ball_bfs_oracle(q, 40)
    assert set(cover.elements) == set(oracle)  # set equality, not just counts
    _report(2, "Gamma_o enumeration, |set| = %d" % len(cover), t0)


def test_criterion_3_cover_validity():
    t0 = time.time()
    for maker, spec in ((cover_Fu, FULL), (cover_Fu, G2), (cover_Fo, FULL), (cover_Fo, G2)):
        report = verify_cover(maker(spec), 1000, seed=42)
        assert report.passed, report.to_dict()
        assert report.n_pairs >= 1000
    _report(3, "cover validity on 4x1000 pairs", t0)


def test_criterion_4_generic_central_cover():
    t0 = time.time()
    cover = cover_central_generic(FULL, REGION_FO, BASE_FO)
    report = verify_cover(cover, 1000, seed=43)
    assert report.passed, report.to_dict()
    # every element realizing a minimal sample distance belongs to the set
    elements = set(cover.elements)
    rng = random.Random(44)
    for _ in range(200):
        p = sample_region_point(REGION_FO, rng, grid_denominator=10**4)
        q = sample_region_point(REGION_FO, rng, grid_denominator=10**4)
        v = surface_cosh2_oracle(p, q, FULL)
        realizers = [
            g for g in enumerate_ball(BallQuery(FULL, p, q, float(v) / 2 + 1e-12))
            if cosh2_distance(p, mobius_apply(g, q)) == v
        ]
        assert realizers
        assert set(realizers) <= elements
    _report(4, "generic central cover", t0)


def test_criterion_5_coset_decomposition():
    t0 = time.time()
    reps = G2.coset_representatives()
    assert G2.index() == 6 and len(reps) == 6
    for i, r in enumerate(reps):
        for s in reps[i + 1:]:
            assert not G2.is_member(r * s.inverse())
    area = SubgroupDomain(G2).area()
    assert abs(area - 2 * math.pi) < 1e-9
    _report(5, "coset decomposition", t0)


def test_criterion_6_cauchy_schwarz_chain():
    t0 = time.time()
    rng = random.Random(45)
    for spec in (FULL, G2):
        for _ in range(25):
            n = rng.randrange(3, 201)
            pts = sample_points(spec, n, seed=rng.randrange(10**6))
            stats = distance_stats(pts, spec, method="exact")
            m = stats.n_points  # duplicates may collapse
            assert stats.pair_sum == m * m - m
            assert stats.quadruple_count == sum(k * k for k in stats.multiplicities)
            q = stats.quadruple_count
            assert stats.cs_bound == Fraction((m * m - m) ** 2, q)
            assert stats.cs_bound <= stats.distinct  # exact rational comparison
    _report(6, "Cauchy-Schwarz chain, 50 sets", t0)


def test_criterion_7_distinct_distance_sweep():
    t0 = time.time()
    n_values = [64, 128, 256, 512, 1024, 2048, 4096]
    for spec_str in ("full", "gamma:2"):
        cfg = ExperimentConfig(spec=spec_str, n_values=n_values, seed=7)
        rows = run_experiment(cfg)
        for r in rows:
            assert r["ratio"] >= 0.5, (spec_str, r)
        assert rows_to_csv(rows) == rows_to_csv(run_experiment(cfg))  # deterministic
    _report(7, "distinct-distance sweep to N=4096", t0)


def test_criterion_8_equilateral_search():
    t0 = time.time()
    for spec in (FULL, G2):
        for d in (0.4, 1.5):
            k2 = equilateral_search(spec, 2, d, seed=0)
            assert k2 is not None and k2.residual <= 1e-10
        cand = equilateral_search(spec, 3, 0.4, seed=0)
        assert cand is not None and cand.residual <= 1e-10
        target = cand.cosh2_target
        for i in range(3):
            for j in range(i + 1, 3):
                v = surface_cosh2_oracle(cand.points[i].to_exact(),
                                         cand.points[j].to_exact(), spec)
                assert abs(float(v) - target) <= 1e-10  # oracle re-verification
    _report(8, "equilateral search k=2,3", t0)


def test_criterion_9_orbit_oracle_agreement():
    t0 = time.time()
    queries = 0
    for spec in (FULL, G2):
        for cx, cy, sx, sy, rad in (
            (0, 2, 0, 2, 4.0), (0, 1, 0, 1, 3.0),
            (Fraction(1, 4), 1, Fraction(-1, 4), 2, 3.5),
            (Fraction(-1, 2), 3, Fraction(1, 3), 1, 2.5),
            (0, 2, Fraction(2, 5), Fraction(6, 5), 4.0),
            (Fraction(1, 5), Fraction(7, 5), Fraction(1, 5), Fraction(7, 5), 3.0),
            (Fraction(3, 7), 1, 0, 5, 2.0),
        ):
            q = BallQuery(spec, UHPoint(cx, cy), UHPoint(sx, sy), math.cosh(rad))
            assert set(enumerate_ball(q)) == set(enumerate_ball_bfs_oracle(q, 32))
            queries += 1
    assert queries >= 14
    # a few extra randomized grid queries to reach 25
    rng = random.Random(46)
    while queries < 25:
        c = UHPoint(Fraction(rng.randrange(-8, 8), 8), Fraction(rng.randrange(8, 24), 8))
        s = UHPoint(Fraction(rng.randrange(-8, 8), 8), Fraction(rng.randrange(8, 24), 8))
        q = BallQuery(FULL, c, s, math.cosh(rng.uniform(1.0, 4.0)))
        assert set(enumerate_ball(q)) == set(enumerate_ball_bfs_oracle(q, 32))
        queries += 1
    _report(9, "orbit oracle agreement, 25 queries", t0)
