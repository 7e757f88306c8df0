"""Numerical search for equilateral point sets on a modular surface.

Strategy: place a base pair by a random point and geodesic direction
(rejecting pairs whose connecting segment has a group shortcut), then
solve for further vertices on the distance circle around the last anchor
by a scan-and-bisect of the surface-distance residual.  Newton-type
iterations are deliberately avoided: the surface distance is a minimum of
smooth plane distances and solutions can sit on branch kinks, where
derivative steps oscillate between basins.  Accepted configurations are
re-verified pair by pair with the exact surface distance.
"""

import math
import random
from dataclasses import dataclass

from .domain import reduce_to_F
from . import kernels
from .metrics import surface_cosh2_fast
from .uhp import UHPoint, cosh2_distance, mobius_apply


@dataclass
class EquilateralCandidate:
    points: list
    cosh2_target: float
    residual: float  # max pairwise |2cosh - target| over surface distances

    def to_dict(self):
        return {
            "points": [str(p) for p in self.points],
            "cosh2_target": self.cosh2_target,
            "residual": self.residual,
        }


def surface_witness(p, q, spec):
    """(2cosh d_Y(p, q), w) with w a plane point realizing the minimum,
    i.e. d_H2(p, w) = d_Y(p, q) and w in the Gamma-orbit of q."""
    up, gp = reduce_to_F(p.to_exact())
    uq, gq = reduce_to_F(q.to_exact())
    wp, wq = gp.inverse(), gq.inverse()
    v, cands, overflow = kernels.pair_min_cosh2(
        float(up.x), float(up.y), wp.entries(),
        float(uq.x), float(uq.y), wq.entries(),
        kernels.kind_code(spec), spec.level, collect=4,
    )
    zq = UHPoint(float(uq.x), float(uq.y))
    pf = UHPoint(float(p.x), float(p.y))
    best = None
    for m in cands:
        comp = (wp.a * m[0] + wp.b * m[2], wp.a * m[1] + wp.b * m[3],
                wp.c * m[0] + wp.d * m[2], wp.c * m[1] + wp.d * m[3])
        img = mobius_apply(comp, zq)
        val = cosh2_distance(pf, img)
        if best is None or val < best[0]:
            best = (val, img)
    if best is None:
        return v, UHPoint(float(q.x), float(q.y))
    return best[0], best[1]


def _rotation_about_i(alpha):
    c, s = math.cos(alpha / 2.0), math.sin(alpha / 2.0)
    return (c, s, -s, c)


def _geodesic_endpoint(p, alpha, d):
    """Endpoint of the geodesic of length d from p with direction alpha."""
    z = mobius_apply(_rotation_about_i(alpha), UHPoint(0.0, math.exp(d)))
    x, y = float(p.x), float(p.y)
    return UHPoint(x + y * float(z.x), y * float(z.y))


def _circle_solutions(center, other, d, target, spec, n_scan=360, iters=100):
    """Points on the radius-d circle around `center` at surface distance d
    from `other`.

    The circle is parametrized by the direction angle; the surface distance
    to `other` is continuous (piecewise smooth) along it, so sign changes
    of the residual bracket every transversal solution and plain bisection
    nails them.  Yields UHPoints in crossing order.
    """

    def resid(theta):
        q = _geodesic_endpoint(center, theta, d)
        return float(surface_cosh2_fast(q, other, spec)) - target

    step = 2.0 * math.pi / n_scan
    vals = [resid(i * step) for i in range(n_scan + 1)]
    for i in range(n_scan):
        lo, hi = i * step, (i + 1) * step
        flo, fhi = vals[i], vals[i + 1]
        if flo == 0.0:
            yield _geodesic_endpoint(center, lo, d)
            continue
        if flo * fhi >= 0.0:
            continue
        for _ in range(iters):
            mid = 0.5 * (lo + hi)
            fm = resid(mid)
            if fm == 0.0:
                lo = hi = mid
                break
            if flo * fm < 0.0:
                hi, fhi = mid, fm
            else:
                lo, flo = mid, fm
        yield _geodesic_endpoint(center, 0.5 * (lo + hi), d)


def _surface_residual(points, target, spec):
    worst = 0.0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            v = float(surface_cosh2_fast(points[i], points[j], spec))
            worst = max(worst, abs(v - target))
    return worst


def equilateral_search(spec, k, d, budget=200, seed=0, tol=1e-10):
    """Search for k points with pairwise surface distance d.

    Returns an EquilateralCandidate or None (not a disproof).  Incremental
    placement with seeded random restarts; the accepted configuration is
    re-verified pair by pair with the exact surface distance.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    if d <= 0:
        raise ValueError("need d > 0")
    target = 2.0 * math.cosh(d)
    rng = random.Random(seed)
    for attempt in range(budget):
        if attempt == 0:
            p1, alpha = UHPoint(0.05, 1.0), 0.0
        else:
            p1 = UHPoint(rng.uniform(-0.45, 0.45), math.exp(rng.uniform(-0.1, 0.7)))
            alpha = rng.uniform(0.0, 2.0 * math.pi)
        p2 = _geodesic_endpoint(p1, alpha, d)
        pts = [p1, p2]
        if _surface_residual(pts, target, spec) > tol:
            continue  # base segment has a group shortcut; replace it
        if k == 2:
            return EquilateralCandidate(pts, target, _surface_residual(pts, target, spec))
        ok = True
        while ok and len(pts) < k:
            placed = None
            for cand in _circle_solutions(pts[-1], pts[0], d, target, spec):
                trial = pts + [cand]
                if _surface_residual(trial, target, spec) <= tol:
                    placed = cand
                    break
            if placed is None:
                ok = False
            else:
                pts.append(placed)
        if ok:
            return EquilateralCandidate(pts, target, _surface_residual(pts, target, spec))
    return None
