"""Exact arithmetic in PSL(2,Z): elements, congruence subgroups, cosets."""

from functools import lru_cache

from .uhp import RealMatrix2


class ModularElement:
    """An integer matrix (a b; c d), det 1, modulo +-I.

    Canonical sign: c > 0, or c == 0 and d > 0.  Entries are plain Python
    integers, so there is no overflow to guard against.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        if a * d - b * c != 1:
            raise ValueError("determinant != 1: (%s %s; %s %s)" % (a, b, c, d))
        if c < 0 or (c == 0 and d < 0):
            a, b, c, d = -a, -b, -c, -d
        self.a, self.b, self.c, self.d = a, b, c, d

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        return ModularElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return ModularElement(self.d, -self.b, -self.c, self.a)

    def __eq__(self, other):
        return (
            isinstance(other, ModularElement)
            and self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return "ModularElement(%s, %s, %s, %s)" % self.entries()

    def to_list(self):
        return [self.a, self.b, self.c, self.d]

    @classmethod
    def from_list(cls, v):
        a, b, c, d = v
        return cls(int(a), int(b), int(c), int(d))

    def to_matrix(self):
        return RealMatrix2(self.a, self.b, self.c, self.d)


IDENTITY = ModularElement(1, 0, 0, 1)
S = ModularElement(0, -1, 1, 0)
T = ModularElement(1, 1, 0, 1)
T_INV = T.inverse()

# BFS generator order is part of the coset-representative contract.
GENERATORS = (S, T, T_INV)


def compose(g, h):
    return g * h


def translation(k):
    return ModularElement(1, k, 0, 1)


_KINDS = ("full", "gamma", "gamma0", "gamma1")


class SubgroupSpec:
    """One of PSL(2,Z), Gamma(N), Gamma0(N), Gamma1(N)."""

    __slots__ = ("kind", "level", "_cosets")

    def __init__(self, kind, level=1):
        if kind not in _KINDS:
            raise ValueError("unknown subgroup kind %r" % (kind,))
        level = int(level)
        if level < 1:
            raise ValueError("level must be positive")
        if kind == "full":
            level = 1
        self.kind = kind
        self.level = level
        self._cosets = None

    @classmethod
    def parse(cls, s):
        """Parse 'full', 'gamma:N', 'gamma0:N' or 'gamma1:N'."""
        s = s.strip().lower()
        if s == "full":
            return cls("full")
        if ":" not in s:
            raise ValueError("bad subgroup string %r" % (s,))
        kind, _, n = s.partition(":")
        return cls(kind, int(n))

    def __str__(self):
        if self.kind == "full":
            return "full"
        return "%s:%d" % (self.kind, self.level)

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupSpec)
            and self.kind == other.kind
            and self.level == other.level
        )

    def __hash__(self):
        return hash((self.kind, self.level))

    def is_member(self, g):
        """Congruence membership test on entries mod N, under the +-I quotient."""
        n = self.level
        if self.kind == "full":
            return True
        a, b, c, d = g.a % n, g.b % n, g.c % n, g.d % n
        if self.kind == "gamma0":
            return c == 0
        for aa, bb, cc, dd in ((a, b, c, d), (-g.a % n, -g.b % n, -g.c % n, -g.d % n)):
            if self.kind == "gamma":
                if aa == 1 and dd == 1 and bb == 0 and cc == 0:
                    return True
            else:  # gamma1
                if cc == 0 and aa == 1 and dd == 1:
                    return True
        return False

    def coset_representatives(self, max_word_length=64):
        """Right-coset representatives alpha_i, PSL(2,Z) = union Gamma alpha_i.

        Breadth-first over {S, T, T^-1} from the identity; the first word
        reaching a new coset becomes its representative, so the list is
        deterministic.
        """
        if self._cosets is not None:
            return self._cosets
        reps = [IDENTITY]
        inv = [IDENTITY]  # cached inverses of reps
        frontier = [IDENTITY]
        depth = 0
        while frontier:
            if depth > max_word_length:
                raise RuntimeError(
                    "coset enumeration did not close within word length %d"
                    % max_word_length
                )
            new_frontier = []
            for w in frontier:
                for g in GENERATORS:
                    cand = w * g
                    if any(self.is_member(cand * ri) for ri in inv):
                        continue
                    reps.append(cand)
                    inv.append(cand.inverse())
                    new_frontier.append(cand)
            frontier = new_frontier
            depth += 1
        self._cosets = reps
        return reps

    def index(self):
        return len(self.coset_representatives())

    def coset_index_of(self, g):
        """Index i with g in Gamma * alpha_i."""
        for i, r in enumerate(self.coset_representatives()):
            if self.is_member(g * r.inverse()):
                return i
        raise RuntimeError("coset decomposition inconsistent")


@lru_cache(maxsize=None)
def parse_spec(s):
    return SubgroupSpec.parse(s)
