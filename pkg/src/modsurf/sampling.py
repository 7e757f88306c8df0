"""Seeded rejection sampling of regions with respect to the hyperbolic measure.

Density dx dy / y^2 over a bounding box, cusp ends truncated at a y-cap.
The grid sampler snaps to a rational lattice (denominators <= 10^4 by
default) so that downstream distance statistics stay exact.
"""

import math
import random
from fractions import Fraction

from .domain import REGION_F
from .uhp import UHPoint, mobius_apply

MAX_DRAWS = 10**6

_SQRT3_2 = math.sqrt(3.0) / 2.0


class SamplingError(RuntimeError):
    pass


def _region_box(region, y_cap):
    if region.tag in ("F", "translate"):
        return -0.5, 0.5, _SQRT3_2, y_cap
    if region.tag == "Fu":
        return -0.5, 0.5, 2.0, y_cap
    if region.tag == "Fo":
        return -0.5, 0.5, _SQRT3_2, 2.0
    if region.tag == "strip":
        return 0.0, 1.0, float(region.T), max(y_cap, 2.0 * float(region.T))
    raise ValueError(region.tag)


def _draw_y(rng, ylo, yhi):
    # inverse transform for density 1/y^2 on [ylo, yhi]
    u = rng.random()
    return 1.0 / (1.0 / ylo - u * (1.0 / ylo - 1.0 / yhi))


def sample_region_point(region, rng, grid_denominator=None, y_cap=10.0):
    """One point of `region`, hyperbolic-uniform (up to grid snapping).

    With grid_denominator set, coordinates are snapped to that rational
    lattice and membership is re-checked exactly; the returned point is
    rational-exact.
    """
    base = REGION_F if region.tag == "translate" else region
    xlo, xhi, ylo, yhi = _region_box(base, y_cap)
    for _ in range(MAX_DRAWS):
        x = xlo + rng.random() * (xhi - xlo)
        y = _draw_y(rng, ylo, yhi)
        if grid_denominator:
            q = grid_denominator
            x = Fraction(round(x * q), q)
            y = Fraction(round(y * q), q)
            if y <= 0:
                continue
        z = UHPoint(x, y)
        if not base.contains(z):
            continue
        if region.tag == "translate":
            z = mobius_apply(region.matrix, z)
        return z
    raise SamplingError("rejection sampling failed after %d draws" % MAX_DRAWS)


def sample_points(spec, n, sampler="grid", seed=0, grid_denominator=10**4, y_cap=10.0):
    """N points in the fundamental domain of `spec`, deterministic per seed."""
    if n < 1:
        raise ValueError("need n >= 1")
    if sampler not in ("grid", "uniform"):
        raise ValueError("unknown sampler %r" % (sampler,))
    rng = random.Random(seed)
    reps = spec.coset_representatives()
    denom = grid_denominator if sampler == "grid" else None
    out = []
    for _ in range(n):
        u = sample_region_point(REGION_F, rng, grid_denominator=denom, y_cap=y_cap)
        alpha = reps[rng.randrange(len(reps))]
        out.append(mobius_apply(alpha, u))
    return out
