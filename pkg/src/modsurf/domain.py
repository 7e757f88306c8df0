"""Fundamental domains for the modular group: reduction and partition.

The standard domain is F = {|Re z| <= 1/2, |z| >= 1}, split into the cusp
neighbourhood F_u = {|x| <= 1/2, y >= 2} and the bounded rest F_o = F \\ F_u.
Strips P(T) = {0 < x < 1, y >= T} model cuspidal zones; a stored scaling
matrix maps a strip to the zone of a general cusp.
"""

import math
from fractions import Fraction

from .modular import IDENTITY, S, translation
from .uhp import UHPoint, mobius_apply

F_U_THRESHOLD = 2  # the y >= 2 cut; any larger cut also works


class Region:
    """A subset of H2: F, F_u, F_o, a strip P(T) or a translate alpha(F).

    For strips, ``matrix`` holds the cusp scaling sigma mapping the strip
    into the cuspidal zone (identity for the cusp at infinity).
    """

    __slots__ = ("tag", "T", "matrix")

    def __init__(self, tag, T=None, matrix=None):
        if tag not in ("F", "Fu", "Fo", "strip", "translate"):
            raise ValueError("unknown region tag %r" % (tag,))
        if tag == "strip":
            if T is None or T <= 0:
                raise ValueError("strip needs a parameter T > 0")
        if tag == "translate" and matrix is None:
            raise ValueError("translate region needs its matrix")
        self.tag = tag
        self.T = T
        self.matrix = matrix if matrix is not None else IDENTITY

    def contains(self, z):
        """Exact membership for rational-exact points."""
        x, y = z.x, z.y
        if self.tag == "strip":
            return 0 < x < 1 and y >= self.T
        if self.tag == "translate":
            z = mobius_apply(self.matrix.inverse(), z)
            x, y = z.x, z.y
        if self.tag == "Fu":
            return abs(x) <= Fraction(1, 2) and y >= F_U_THRESHOLD
        in_f = abs(x) <= Fraction(1, 2) and x * x + y * y >= 1
        if self.tag in ("F", "translate"):
            return in_f
        # Fo
        return in_f and y < F_U_THRESHOLD

    def area(self):
        """Hyperbolic area; closed forms, translates by invariance."""
        if self.tag in ("F", "translate"):
            return math.pi / 3.0
        if self.tag == "Fu":
            return 1.0 / F_U_THRESHOLD
        if self.tag == "Fo":
            return math.pi / 3.0 - 1.0 / F_U_THRESHOLD
        raise ValueError("strip has infinite area")

    def corner_samples(self, denominator=10**6):
        """Exact rational in-region points near the corners and edge midpoints.

        Irrational corners (rho and its mirror) are nudged inward onto a
        rational grid so that distance tests on them stay exact.
        """
        half = Fraction(1, 2)
        if self.tag == "Fu":
            pts = [(-half, 2), (half, 2), (0, 2), (-half, 4), (half, 4), (0, 8)]
            return [UHPoint(x, y) for x, y in pts]
        if self.tag == "Fo":
            eps = Fraction(1, denominator)
            sqrt3_2 = Fraction(math.isqrt(3 * denominator**2), 2 * denominator)
            cands = [
                (-half, sqrt3_2),  # near rho
                (half, sqrt3_2),  # near rho + 1
                (0, 1),  # bottom of the arc
                (-half, 2 - eps),
                (half, 2 - eps),
                (0, 2 - eps),
                (-half, Fraction(5, 4)),
                (half, Fraction(5, 4)),
            ]
            out = []
            for x, y in cands:
                p = UHPoint(x, y)
                while not self.contains(p):
                    y += eps
                    p = UHPoint(x, y)
                out.append(p)
            return out
        if self.tag == "strip":
            t = Fraction(self.T).limit_denominator(denominator)
            if t < self.T:
                t += Fraction(1, denominator)
            eps = Fraction(1, denominator)
            pts = [(eps, t), (1 - eps, t), (half, t), (eps, 2 * t), (1 - eps, 2 * t)]
            return [UHPoint(x, y) for x, y in pts]
        raise ValueError("no corner samples for region %r" % (self.tag,))

    def diameter_cosh(self):
        """cosh(diam) for regions with a known closed form (F_o only)."""
        if self.tag == "Fo":
            # attained between the corner rho and the opposite top corner
            return 23.0 * math.sqrt(3.0) / 24.0
        raise ValueError("diameter unknown for region %r" % (self.tag,))

    def __repr__(self):
        if self.tag == "strip":
            return "Region('strip', T=%s)" % (self.T,)
        return "Region(%r)" % (self.tag,)


REGION_F = Region("F")
REGION_FU = Region("Fu")
REGION_FO = Region("Fo")


def reduce_to_F(z, max_iter=10000):
    """Return (z', gamma) with gamma * z = z' in F.

    Boundary convention: Re in [-1/2, 1/2); on the unit arc keep Re <= 0.
    Exact for rational-exact input.
    """
    x, y = z.x, z.y
    g = IDENTITY
    half = Fraction(1, 2) if z.exact else 0.5
    for _ in range(max_iter):
        k = math.floor(x + half)
        if k != 0:
            x -= k
            g = translation(-k) * g
        norm = x * x + y * y
        if norm > 1:
            break
        if norm == 1:
            if x > 0:  # keep the Re <= 0 half of the arc
                x, y = -x, y
                g = S * g
            break
        # invert; strictly increases y
        x, y = -x / norm, y / norm
        g = S * g
    else:
        raise RuntimeError("reduction did not terminate")
    if x == half:  # right edge maps to the left one
        x -= 1
        g = translation(-1) * g
    return UHPoint(x, y), g


def classify_in_F(z):
    """Return 'Fu', 'Fo' or 'outside'."""
    if REGION_FU.contains(z):
        return "Fu"
    if REGION_FO.contains(z):
        return "Fo"
    return "outside"


class SubgroupDomain:
    """Fundamental domain of a finite-index subgroup as coset translates of F."""

    def __init__(self, spec):
        self.spec = spec
        self.pieces = [
            Region("translate", matrix=alpha) for alpha in spec.coset_representatives()
        ]

    def area(self):
        return sum(p.area() for p in self.pieces)


def reduce_to_subgroup_domain(z, spec):
    """Return (z', piece index i, gamma in Gamma) with gamma * z in alpha_i(F)."""
    w, delta = reduce_to_F(z)
    reps = spec.coset_representatives()
    for i, alpha in enumerate(reps):
        gamma = alpha * delta
        if spec.is_member(gamma):
            return mobius_apply(alpha, w), i, gamma
    raise RuntimeError("coset decomposition inconsistent for %s" % (spec,))
