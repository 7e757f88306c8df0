"""Geodesic covers of F_u, F_o, strips and generic bounded regions.

A geodesic cover of a region is a finite subset C of the group such that
the surface distance between any two points of the region is realized by
min over pairs (g1, g2) in C^2 of the plane distance d(g1 p, g2 q).
"""

import math
import random
from dataclasses import dataclass

import mpmath
import numpy as np

from .domain import REGION_FO, REGION_FU, Region
from .metrics import surface_cosh2_cover, surface_cosh2_oracle
from .modular import IDENTITY, T, T_INV, SubgroupSpec
from .orbit import BallQuery, enumerate_ball
from .sampling import sample_region_point
from .uhp import UHPoint

TRANSLATIONS = (T_INV, IDENTITY, T)


def _mp_constants():
    with mpmath.workdps(50):
        cosh_diam = 23 * mpmath.sqrt(3) / 24
        cosh_r0 = 5 * mpmath.sqrt(3) / 6
        sinh_diam = mpmath.sqrt(cosh_diam**2 - 1)
        sinh_r0 = mpmath.sqrt(cosh_r0**2 - 1)
        # cosh/sinh addition chain for diam + 2 r0 and diam + 3 r0
        ch, sh = cosh_diam, sinh_diam
        for _ in range(2):
            ch, sh = ch * cosh_r0 + sh * sinh_r0, sh * cosh_r0 + ch * sinh_r0
        cover_radius = ch
        ch, sh = ch * cosh_r0 + sh * sinh_r0, sh * cosh_r0 + ch * sinh_r0
        disc_radius = ch
        return (
            float(cosh_diam),
            float(cosh_r0),
            float(cover_radius),
            float(disc_radius),
        )


@dataclass(frozen=True)
class CoveringConstants:
    """Explicit constants of the F_o covering argument."""

    cosh_diam_fo: float
    cosh_r0: float
    area_fo: float
    cover_radius_cosh: float  # cosh(diam + 2 r0)
    disc_radius_cosh: float  # cosh(diam + 3 r0)
    area_disc: float  # 2 pi (cosh(diam + 3 r0) - 1) = (pi/36)(848 + 11 sqrt(4381))
    bound: int = 252

    @classmethod
    def compute(cls):
        cosh_diam, cosh_r0, cover_r, disc_r = _mp_constants()
        return cls(
            cosh_diam_fo=cosh_diam,
            cosh_r0=cosh_r0,
            area_fo=math.pi / 3.0 - 0.5,
            cover_radius_cosh=cover_r,
            disc_radius_cosh=disc_r,
            area_disc=2.0 * math.pi * (disc_r - 1.0),
        )

    def area_disc_closed_form(self):
        return math.pi / 36.0 * (848.0 + 11.0 * math.sqrt(4381.0))


COVERING = CoveringConstants.compute()

BASE_FO = UHPoint(0, 2)  # the point 2i; not an elliptic fixed point


class GeodesicCover:
    """A certified finite element set for a region of the fundamental domain."""

    def __init__(self, region, spec, elements, provenance, certified=True):
        elements = sorted(set(elements), key=lambda g: (g.c, g.d, g.a))
        if IDENTITY not in elements:
            raise ValueError("a geodesic cover must contain the identity")
        self.region = region
        self.spec = spec
        self.elements = tuple(elements)
        self.provenance = provenance
        self.certified = certified
        self._products = None
        self._prod_array = None

    def __len__(self):
        return len(self.elements)

    def products(self):
        """The difference set {g1^-1 g2}; realizes the same pairwise minima."""
        if self._products is None:
            prods = {g1.inverse() * g2 for g1 in self.elements for g2 in self.elements}
            self._products = sorted(prods, key=lambda g: (g.c, g.d, g.a))
        return self._products

    def product_array(self):
        if self._prod_array is None:
            self._prod_array = np.array(
                [g.entries() for g in self.products()], dtype=np.float64
            )
        return self._prod_array

    def to_dict(self):
        return {
            "region": repr(self.region),
            "spec": str(self.spec) if self.spec else None,
            "provenance": self.provenance,
            "cardinality": len(self.elements),
            "certified": self.certified,
            "elements": [g.to_list() for g in self.elements],
        }


def cover_Fu(spec):
    """The translation cover {T^-1, I, T} intersected with the subgroup."""
    elems = [g for g in TRANSLATIONS if spec.is_member(g)]
    return GeodesicCover(REGION_FU, spec, elems, "translation-cover")


def fo_ball_threshold():
    """cosh(diam(F_o) + 2 r_0), rounded up so the ball can only grow."""
    return COVERING.cover_radius_cosh + 1e-9


def cover_Fo(spec, threshold=None):
    """Ball cover of F_o: elements moving 2i by at most diam + 2 r_0."""
    h = fo_ball_threshold() if threshold is None else threshold
    elems = enumerate_ball(BallQuery(spec, BASE_FO, BASE_FO, h))
    return GeodesicCover(REGION_FO, spec, elems, "ball-cover")


def cover_central_generic(spec, region, base, diam=None):
    """Ball cover {g : d(O, g O) <= 3 diam} of a bounded region.

    The base point must not be an elliptic fixed point.
    """
    if diam is None:
        diam = math.acosh(region.diameter_cosh())
    if diam < 0:
        raise ValueError("negative diameter")
    stab = enumerate_ball(BallQuery(spec, base, base, 1))
    if len(stab) > 1:
        raise ValueError("base point is fixed by a nontrivial element")
    h = math.cosh(3.0 * diam) + 1e-9
    elems = enumerate_ball(BallQuery(spec, base, base, h))
    return GeodesicCover(region, spec, elems, "generic-central")


def cover_strip(T_param, c_min):
    """Strip cover: the three translations, certified for T large enough.

    Certified when T >= 100 + 10 / c_min (sufficient condition); below that
    the same set is returned but flagged unverified.  For the modular
    strip-at-infinity the F_u translation cover certifies small T
    independently.
    """
    if T_param <= 0:
        raise ValueError("strip parameter must be positive")
    if c_min <= 0:
        raise ValueError("c_min must be positive")
    certified = T_param >= 100.0 + 10.0 / c_min
    region = Region("strip", T=T_param)
    return GeodesicCover(
        region, SubgroupSpec("full"), TRANSLATIONS, "translation-cover",
        certified=certified,
    )


@dataclass
class VerifyReport:
    passed: bool
    n_pairs: int
    failures: int
    worst_gap: float  # max of cover_min - oracle over 2cosh values
    seed: int

    def to_dict(self):
        return {
            "passed": self.passed,
            "pairs": self.n_pairs,
            "failures": self.failures,
            "worst_gap": self.worst_gap,
            "seed": self.seed,
        }


def verify_cover(cover, samples, seed, y_cap=10.0, grid_denominator=10**4,
                 include_corners=True):
    """Statistical check of the cover property on seeded sample pairs.

    Samples rational grid points of the region (plus near-corner points),
    compares the cover minimum with the oracle surface distance; exact
    agreement is required for rational points.
    """
    rng = random.Random(seed)
    spec = cover.spec
    pts = []
    if include_corners:
        try:
            pts.extend(cover.region.corner_samples())
        except ValueError:
            pass
    need = max(0, 2 * samples - len(pts))
    for _ in range(need):
        pts.append(
            sample_region_point(
                cover.region, rng, grid_denominator=grid_denominator, y_cap=y_cap
            )
        )
    # corner points pair with each other and with random points
    pairs = []
    ncorn = min(len(pts), 12)
    for i in range(ncorn):
        for j in range(i + 1, ncorn):
            pairs.append((pts[i], pts[j]))
    k = ncorn
    while len(pairs) < samples and k + 1 < len(pts):
        pairs.append((pts[k], pts[k + 1]))
        k += 2

    failures = 0
    worst = 0.0
    for p, q in pairs:
        cmin = surface_cosh2_cover(p, q, cover)
        omin = surface_cosh2_oracle(p, q, spec)
        gap = float(cmin - omin)
        if gap > worst:
            worst = gap
        if cmin != omin and gap > 1e-9 * max(1.0, float(omin)):
            failures += 1
        elif cmin != omin:
            failures += 1  # exact inputs must agree exactly
    return VerifyReport(
        passed=failures == 0,
        n_pairs=len(pairs),
        failures=failures,
        worst_gap=worst,
        seed=seed,
    )
