"""Surface distances, distance multisets, quadruple counts, Cauchy-Schwarz.

Surface distances are keyed by exact rational 2cosh values whenever the
inputs are rational, so distinct-distance counting is exact combinatorics;
floating keys fall back to relative-tolerance merging.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .domain import classify_in_F, reduce_to_F
from .modular import ModularElement, SubgroupSpec
from .orbit import BallQuery, enumerate_ball, sweep_candidates
from .uhp import cosh2_distance, cosh2_to_distance, mobius_apply

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class DistanceKey:
    """A 2cosh distance value: exact rational, or float with tolerance."""

    value: object  # Fraction or float
    exact: bool

    @classmethod
    def of(cls, v):
        if isinstance(v, (int, Fraction)):
            return cls(Fraction(v), True)
        return cls(float(v), False)

    def same(self, other):
        if self.exact and other.exact:
            return self.value == other.value
        a, b = float(self.value), float(other.value)
        return abs(a - b) <= FLOAT_TOL * max(1.0, max(a, b))

    def __lt__(self, other):
        return self.value < other.value

    def distance(self):
        return cosh2_to_distance(self.value)


def _reduced(p):
    """(u, W) with p = W(u), u in F."""
    u, g = reduce_to_F(p.to_exact())
    return u, g.inverse()


def surface_cosh2_oracle(p, q, spec):
    """Exact min of 2cosh d(p, gamma q) over gamma in the subgroup.

    Reduces both points to F, then sweeps all integer matrices beating the
    identity candidate; every comparison is exact rational.
    """
    up, wp = _reduced(p)
    uq, wq = _reduced(q)
    gq = wq.inverse()
    m0 = wp.inverse() * wq
    best = cosh2_distance(up, mobius_apply(m0, uq))
    xp, yp = up.as_floats()
    xq, yq = uq.as_floats()
    for mat in sweep_candidates(xp, yp, xq, yq, float(best)):
        m = ModularElement(*mat)
        gamma = wp * m * gq
        if not spec.is_member(gamma):
            continue
        v = cosh2_distance(up, mobius_apply(m, uq))
        if v < best:
            best = v
    return best


def surface_distance_oracle(p, q, spec):
    """Surface distance as a DistanceKey (exact for rational inputs)."""
    return DistanceKey.of(surface_cosh2_oracle(p, q, spec))


def _exact_min_from_candidates(up, uq, cands):
    best = None
    for mat in cands:
        v = cosh2_distance(up, mobius_apply(mat, uq))
        if best is None or v < best:
            best = v
    return best


def surface_cosh2_fast(p, q, spec):
    """Kernel-accelerated exact surface distance (2cosh value).

    The compiled sweep finds the near-minimal candidates; the winner is
    confirmed in exact arithmetic.  Falls back to the pure oracle when the
    candidate buffer overflows.
    """
    up, wp = _reduced(p)
    uq, wq = _reduced(q)
    xp, yp = up.as_floats()
    xq, yq = uq.as_floats()
    v, cands, overflow = kernels.pair_min_cosh2(
        xp, yp, wp.entries(), xq, yq, wq.entries(),
        kernels.kind_code(spec), spec.level,
    )
    if overflow or not cands:
        return surface_cosh2_oracle(p, q, spec)
    return _exact_min_from_candidates(up, uq, cands)


def surface_cosh2_cover(p, q, cover):
    """Min over cover pairs (gamma1, gamma2) of 2cosh d(gamma1 p, gamma2 q).

    Computed through the difference set {gamma1^-1 gamma2}, which gives the
    same minimum because the pair distance equals d(p, gamma1^-1 gamma2 q).
    Exact for rational points; a float prefilter narrows the exact checks.
    """
    if not cover.region.contains(p) or not cover.region.contains(q):
        raise ValueError("points must lie in the cover's region")
    p = p.to_exact()
    q = q.to_exact()
    arr = cover.product_array()
    xq, yq = q.as_floats()
    xp, yp = p.as_floats()
    a, b, c, d = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
    den = (c * xq + d) ** 2 + (c * yq) ** 2
    yw = yq / den
    xw = ((a * xq + b) * (c * xq + d) + a * c * yq * yq) / den
    vals = ((xp - xw) ** 2 + yp * yp + yw * yw) / (yp * yw)
    vmin = vals.min()
    near = np.nonzero(vals <= vmin * (1.0 + 1e-9))[0]
    best = None
    for i in near:
        g = cover.products()[i]
        v = cosh2_distance(p, mobius_apply(g, q))
        if best is None or v < best:
            best = v
    return best


def surface_distance_cover(p, q, cover):
    return DistanceKey.of(surface_cosh2_cover(p, q, cover))


@dataclass
class DistanceStats:
    """Distance multiset statistics of a point set on a surface."""

    n_points: int
    distinct: int
    multiplicities: list  # ordered-pair counts n_i per distinct distance
    quadruple_count: int
    cs_bound: Fraction  # (N^2 - N)^2 / |Q|
    keys: list = field(default_factory=list, repr=False)

    @property
    def pair_sum(self):
        return sum(self.multiplicities)


def _stabilizer(u):
    # elements of PSL(2,Z) fixing u; {I} except at elliptic points
    full = SubgroupSpec("full")
    return enumerate_ball(BallQuery(full, u, u, 1))


def collapse_surface_duplicates(points, spec):
    """Collapse points that coincide on the surface; returns reduced data.

    Output: list of (u, W) with p = W(u), one entry per distinct surface
    point, and the number dropped.
    """
    groups = {}
    for p in points:
        u, w = _reduced(p)
        groups.setdefault((u.x, u.y), []).append((u, w))
    out = []
    dropped = 0
    for (_, _), members in groups.items():
        u = members[0][0]
        stab = _stabilizer(u) if len(members) > 1 else None
        kept = []
        for (uu, w) in members:
            dup = False
            for (_, w2) in kept:
                for s in stab:
                    if spec.is_member(w2 * s * w.inverse()):
                        dup = True
                        break
                if dup:
                    break
            if dup:
                dropped += 1
            else:
                kept.append((uu, w))
        out.extend(kept)
    return out, dropped


def _histogram_exact(values):
    return Counter(values)


def _histogram_float(values, tol=FLOAT_TOL):
    """Merge sorted float values into tolerance classes; returns class sizes."""
    vals = np.sort(np.asarray(values, dtype=np.float64))
    sizes = []
    reps = []
    start = 0
    for i in range(1, len(vals) + 1):
        if i == len(vals) or vals[i] - vals[i - 1] > tol * max(1.0, vals[i]):
            sizes.append(i - start)
            reps.append(vals[start])
            start = i
    return reps, sizes


def _stats_from_multiplicities(n, mult, keys):
    q = sum(m * m for m in mult)
    pairs = n * n - n
    bound = Fraction(pairs * pairs, q) if q else Fraction(0)
    return DistanceStats(
        n_points=n,
        distinct=len(mult),
        multiplicities=mult,
        quadruple_count=q,
        cs_bound=bound,
        keys=keys,
    )


def _pair_values_exact(reduced, spec, use_covers=True):
    """Exact 2cosh surface distances for all unordered pairs."""
    from . import covers as covers_mod

    n = len(reduced)
    xs = np.array([float(u.x) for u, _ in reduced])
    ys = np.array([float(u.y) for u, _ in reduced])
    words = np.array([w.entries() for _, w in reduced], dtype=np.int64)

    cover_cache = {}
    normal = spec.kind in ("full", "gamma")

    def region_cover(tag):
        if tag not in cover_cache:
            if tag == "Fu":
                cover_cache[tag] = covers_mod.cover_Fu(spec)
            else:
                cover_cache[tag] = covers_mod.cover_Fo(spec)
        return cover_cache[tag]

    out, cand, ncand = kernels.pairwise_min_cosh2(
        xs, ys, words, kernels.kind_code(spec), spec.level, collect=8
    )
    values = []
    idx = 0
    regions = [classify_in_F(u) for u, _ in reduced]
    for i in range(n):
        ui, wi = reduced[i]
        for j in range(i + 1, n):
            uj, wj = reduced[j]
            same_piece = normal and (spec.kind == "full" or spec.is_member(wi.inverse() * wj))
            if use_covers and same_piece and regions[i] == regions[j] and regions[i] != "outside":
                v = surface_cosh2_cover(ui, uj, region_cover(regions[i]))
            elif ncand[idx] < 0:
                v = surface_cosh2_oracle(
                    mobius_apply(wi, ui), mobius_apply(wj, uj), spec
                )
            else:
                cands = [tuple(int(e) for e in cand[idx, k]) for k in range(ncand[idx])]
                v = _exact_min_from_candidates(ui, uj, cands)
            values.append(v)
            idx += 1
    return values


def distance_stats(points, spec, method="auto", use_covers=True, exact_limit=512):
    """Distance multiset, quadruple count and Cauchy-Schwarz bound.

    Duplicate surface points are collapsed first.  Multiplicities count
    ordered pairs, so sum(n_i) == N^2 - N and |Q| == sum(n_i^2).
    """
    reduced, _ = collapse_surface_duplicates(points, spec)
    n = len(reduced)
    if n < 2:
        return _stats_from_multiplicities(n, [], [])
    if method == "auto":
        all_exact = all(u.exact for u, _ in reduced)
        method = "exact" if (all_exact and n <= exact_limit) else "float"

    if method == "exact":
        values = _pair_values_exact(reduced, spec, use_covers=use_covers)
        hist = _histogram_exact(values)
        keys = sorted(hist)
        mult = [2 * hist[k] for k in keys]  # ordered pairs
        return _stats_from_multiplicities(n, mult, [DistanceKey.of(k) for k in keys])

    xs = np.array([float(u.x) for u, _ in reduced])
    ys = np.array([float(u.y) for u, _ in reduced])
    words = np.array([w.entries() for _, w in reduced], dtype=np.int64)
    vals = kernels.pairwise_min_cosh2(
        xs, ys, words, kernels.kind_code(spec), spec.level
    )
    reps, sizes = _histogram_float(vals)
    mult = [2 * s for s in sizes]
    return _stats_from_multiplicities(n, mult, [DistanceKey.of(r) for r in reps])


def quadruple_count_H2(points):
    """|Q_H2|: ordered 4-tuples with equal nonzero plane distances."""
    n = len(points)
    exact = all(p.exact for p in points)
    values = []
    for i in range(n):
        for j in range(i + 1, n):
            v = cosh2_distance(points[i], points[j])
            if v == 2:  # zero distance excluded by definition
                continue
            values.append(v if exact else float(v))
    if exact:
        hist = _histogram_exact(values)
        mult = [2 * m for m in hist.values()]
    else:
        _, sizes = _histogram_float(values)
        mult = [2 * s for s in sizes]
    return sum(m * m for m in mult)
