"""Hyperbolic circle problem: all group elements moving q into a disc at p.

The workhorse is a direct sweep over the bottom row (c, d): the threshold
pins |cq + d|^2 into an interval, each coprime (c, d) admits a base (a0, b0)
from the extended gcd, and the remaining freedom a = a0 + kc, b = b0 + kd
shifts the real part by k, which the threshold also bounds.  Float bounds
are rounded outward, then every candidate is confirmed with the exact
rational cosh test, so the result is exact.

A breadth-first search over words in {S, T, T^-1} serves as an independent
cross-validation oracle.
"""

import math
from fractions import Fraction

from .modular import GENERATORS, IDENTITY, ModularElement
from .uhp import cosh2_distance, mobius_apply

_OUT = 1e-9


class CapExceeded(RuntimeError):
    pass


class BallQuery:
    """Find {gamma in Gamma : cosh d(p, gamma q) <= H}."""

    __slots__ = ("spec", "center", "source", "threshold")

    def __init__(self, spec, center, source, threshold):
        if threshold < 1:
            raise ValueError("cosh threshold must be >= 1")
        self.spec = spec
        self.center = center
        self.source = source
        self.threshold = threshold


def sweep_candidates(xp, yp, xq, yq, b2):
    """Yield integer matrices (a, b, c, d) with float 2cosh d(p, Mq) <~ b2.

    Bounds are outward-rounded; the yield set is a superset of the true
    ball, callers confirm exactly.  Enumerates canonical forms only
    (c > 0, or c == 0 and d == 1).
    """
    b2 = b2 * (1.0 + _OUT) + _OUT
    if b2 < 2.0:
        b2 = 2.0
    lam = (b2 + math.sqrt(max(b2 * b2 - 4.0, 0.0))) / 2.0

    # c = 0: translations
    e = b2 * yp * yq - yp * yp - yq * yq
    if e >= 0.0:
        r = math.sqrt(e)
        for b in range(int(math.floor(xp - xq - r - _OUT)),
                       int(math.ceil(xp - xq + r + _OUT)) + 1):
            yield (1, b, 0, 1)

    dhi = yq * lam / yp * (1.0 + _OUT) + _OUT
    dlo = yq / (yp * lam) * (1.0 - _OUT) - _OUT
    c = 1
    while c * c * yq * yq <= dhi:
        smax = math.sqrt(max(dhi - c * c * yq * yq, 0.0))
        for d in range(int(math.floor(-c * xq - smax - _OUT)),
                       int(math.ceil(-c * xq + smax + _OUT)) + 1):
            if math.gcd(c, d) != 1:
                continue
            den = (c * xq + d) ** 2 + (c * yq) ** 2
            if den < dlo:
                continue
            yw = yq / den
            a0, b0 = _bezout(d, c)
            xw0 = ((a0 * xq + b0) * (c * xq + d) + a0 * c * yq * yq) / den
            e = b2 * yp * yw - yp * yp - yw * yw
            if e < 0.0:
                continue
            r = math.sqrt(e)
            for k in range(int(math.floor(xp - xw0 - r - _OUT)),
                           int(math.ceil(xp - xw0 + r + _OUT)) + 1):
                yield (a0 + k * c, b0 + k * d, c, d)
        c += 1


def _bezout(d, c):
    """(a0, b0) with a0*d - b0*c == 1 for coprime c, d."""
    old_r, r = d, c
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r == 1:
        return old_s, -old_t
    return -old_s, old_t


def enumerate_ball(query, cap=2_000_000):
    """Exact ball enumeration, deterministically ordered by (c, d, a)."""
    p = query.center.to_exact()
    q = query.source.to_exact()
    b2_exact = 2 * Fraction(query.threshold)
    xp, yp = p.as_floats()
    xq, yq = q.as_floats()
    spec = query.spec
    out = []
    seen = 0
    for mat in sweep_candidates(xp, yp, xq, yq, float(b2_exact)):
        seen += 1
        if seen > cap:
            raise CapExceeded("candidate cap %d exceeded" % cap)
        g = ModularElement(*mat)
        if not spec.is_member(g):
            continue
        if cosh2_distance(p, mobius_apply(g, q)) <= b2_exact:
            out.append(g)
    out = sorted(set(out), key=lambda g: (g.c, g.d, g.a))
    return out


def enumerate_ball_bfs_oracle(query, max_word_length, prune_slack=3.0):
    """Word-BFS oracle: elements of the ball reachable by words of bounded
    length in {S, T, T^-1}.

    States are pruned once gamma q leaves a slack-enlarged disc around p, so
    the result is a subset of the true ball, equal to it for generous
    word length and slack.
    """
    p = query.center.to_exact()
    q = query.source.to_exact()
    b2_exact = 2 * Fraction(query.threshold)
    radius = math.acosh(max(float(query.threshold), 1.0))
    prune_b2 = 2.0 * math.cosh(radius + prune_slack) * (1.0 + _OUT)
    xp, yp = p.as_floats()

    def within_prune(g):
        w = mobius_apply(g, q)
        xw, yw = float(w.x), float(w.y)
        val = ((xp - xw) ** 2 + yp * yp + yw * yw) / (yp * yw)
        return val <= prune_b2

    spec = query.spec
    result = set()
    visited = {IDENTITY}
    frontier = [IDENTITY]
    if spec.is_member(IDENTITY) and cosh2_distance(p, q) <= b2_exact:
        result.add(IDENTITY)
    for _ in range(max_word_length):
        new_frontier = []
        for g in frontier:
            for s in GENERATORS:
                h = g * s
                if h in visited:
                    continue
                visited.add(h)
                if not within_prune(h):
                    continue
                new_frontier.append(h)
                if spec.is_member(h) and cosh2_distance(p, mobius_apply(h, q)) <= b2_exact:
                    result.add(h)
        frontier = new_frontier
        if not frontier:
            break
    return sorted(result, key=lambda g: (g.c, g.d, g.a))
