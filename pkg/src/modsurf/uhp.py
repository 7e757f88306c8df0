"""Upper half-plane primitives: points, Mobius action, cosh-distance, areas.

Distances are carried around as 2*cosh(d) values.  For rational points this
keeps everything inside exact rational arithmetic; the actual distance d is
only produced on demand through acosh.
"""

import math
from fractions import Fraction


def _is_rational(v):
    return isinstance(v, (int, Fraction))


def parse_coord(s):
    """Parse a coordinate that is either a decimal literal or 'p/q'."""
    s = s.strip()
    if "/" in s:
        return Fraction(s)
    if "." in s or "e" in s or "E" in s:
        return float(s)
    return Fraction(int(s))


class UHPoint:
    """A point x + iy with y > 0, either rational-exact or floating."""

    __slots__ = ("x", "y", "exact")

    def __init__(self, x, y):
        exact = _is_rational(x) and _is_rational(y)
        if exact:
            x = Fraction(x)
            y = Fraction(y)
        else:
            x = float(x)
            y = float(y)
        if y <= 0:
            raise ValueError("point not in the upper half-plane: y = %r" % (y,))
        self.x = x
        self.y = y
        self.exact = exact

    @classmethod
    def parse(cls, s):
        """Parse 'x,y' with each coordinate decimal or 'p/q'."""
        parts = s.split(",")
        if len(parts) != 2:
            raise ValueError("expected 'x,y', got %r" % (s,))
        return cls(parse_coord(parts[0]), parse_coord(parts[1]))

    def as_floats(self):
        return float(self.x), float(self.y)

    def to_exact(self):
        """Snap a floating point to the exact binary rational it stores."""
        if self.exact:
            return self
        return UHPoint(Fraction(self.x), Fraction(self.y))

    def __repr__(self):
        return "UHPoint(%s, %s)" % (self.x, self.y)

    def __str__(self):
        if self.exact:
            return "%s,%s" % (self.x, self.y)
        return "%r,%r" % (self.x, self.y)

    def __eq__(self, other):
        return isinstance(other, UHPoint) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))


class RealMatrix2:
    """A real 2x2 matrix (a b; c d) with determinant 1.

    Also used to carry cusp scaling matrices; entries may be floats, in
    which case the determinant is only checked to 1e-12.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        det = a * d - b * c
        if _is_rational(det):
            if det != 1:
                raise ValueError("determinant %s != 1" % (det,))
        elif abs(det - 1.0) > 1e-12:
            raise ValueError("determinant %r != 1" % (det,))
        self.a, self.b, self.c, self.d = a, b, c, d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __repr__(self):
        return "RealMatrix2(%s, %s, %s, %s)" % self.entries()


def _entries(m):
    if isinstance(m, RealMatrix2):
        return m.entries()
    if hasattr(m, "entries"):
        return m.entries()
    a, b, c, d = m
    return a, b, c, d


def mobius_apply(m, z):
    """Apply (az+b)/(cz+d) to a UHPoint.

    Exactness is preserved when the matrix entries and the point are
    rational.
    """
    a, b, c, d = _entries(m)
    x, y = z.x, z.y
    den = (c * x + d) ** 2 + (c * y) ** 2
    xn = (a * x + b) * (c * x + d) + a * c * y * y
    return UHPoint(xn / den, y / den)


def cosh2_distance(z1, z2):
    """Return 2*cosh(d(z1, z2)); exact when both points are rational."""
    dx = z1.x - z2.x
    return (dx * dx + z1.y * z1.y + z2.y * z2.y) / (z1.y * z2.y)


def cosh2_to_distance(v):
    """Convert a 2*cosh(d) value to d (floating)."""
    h = float(v) / 2.0
    if h < 1.0:
        # rounding noise below the attainable minimum
        h = 1.0
    return math.acosh(h)


def distance(z1, z2):
    return cosh2_to_distance(cosh2_distance(z1, z2))


def disc_area(r):
    """Hyperbolic area 2*pi*(cosh(r) - 1) of a disc of radius r."""
    if r < 0:
        raise ValueError("negative radius")
    return 2.0 * math.pi * (math.cosh(r) - 1.0)
