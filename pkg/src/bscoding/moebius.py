"""Boundary points, Moebius transformations and geodesics.

All geometry lives in the upper half-plane model.  The boundary circle is
the projective line: a boundary point is a pair (p, q), not both zero, up
to scaling, with the point at infinity represented by (1, 0) and a real
number x by (x, 1).  A Moebius transformation is a real 2x2 matrix of
determinant 1 acting by (p, q) -> (a p + b q, c p + d q); the action has no
special case at infinity, which is the whole reason for the projective
representation.

Pairs with integer or Fraction entries are kept exact: they are stored as
coprime integer pairs with a fixed sign convention, and all predicates on
them (equality, cyclic orientation) are decided with integer arithmetic.
Float pairs are normalised to unit vectors and compared with tolerances.

Circular order.  The boundary is oriented by the Cayley map w = (z-i)/(z+i)
onto the unit circle.  Under this map the point (p, q) lands at angle
atan2(-2 p q, p^2 - q^2), so infinity sits at angle 0 and the angle is an
increasing function of x along the real line.  Counterclockwise on the
circle therefore means increasing x.  The function cyclic_orient decides
the cyclic order of three points exactly for exact points.
"""

import math
from fractions import Fraction

# Points closer than this (as a cross product of unit projective pairs) are
# merged when deduplicating float boundary data.
EPS_PT = 1e-12

# Matrices are considered equal in PSL(2, R) when they differ from +/- the
# other by at most this much entrywise.
EPS_MAT = 1e-9

_TWO_PI = 2.0 * math.pi


def _is_exact_scalar(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class BoundaryPoint:
    """A point of the circle at infinity, as a projective pair (p, q)."""

    __slots__ = ("p", "q", "exact")

    def __init__(self, p, q):
        if _is_exact_scalar(p) and _is_exact_scalar(q):
            p, q = _canonical_int_pair(p, q)
            self.exact = True
        else:
            p = float(p)
            q = float(q)
            h = math.hypot(p, q)
            if h == 0.0 or math.isnan(h) or math.isinf(h):
                raise ValueError("degenerate projective pair (%r, %r)" % (p, q))
            p /= h
            q /= h
            if q < 0.0 or (q == 0.0 and p < 0.0):
                p, q = -p, -q
            self.exact = False
        self.p = p
        self.q = q

    @staticmethod
    def from_real(x):
        """Point for the real number x; accepts int, Fraction, float, math.inf."""
        if isinstance(x, float) and math.isinf(x):
            return BoundaryPoint(1, 0)
        if isinstance(x, Fraction):
            return BoundaryPoint(x.numerator, x.denominator)
        return BoundaryPoint(x, 1)

    @staticmethod
    def infinity():
        return BoundaryPoint(1, 0)

    def as_real(self):
        """The point as a real number (Fraction if exact), math.inf at (1, 0)."""
        if self.q == 0:
            return math.inf
        if self.exact:
            return Fraction(self.p, self.q)
        return self.p / self.q

    def angle(self):
        """Angle in [0, 2*pi) on the Cayley circle; infinity maps to 0."""
        p, q = self.p, self.q
        s = max(abs(p), abs(q))
        fp = p / s
        fq = q / s
        return math.atan2(-2.0 * fp * fq, fp * fp - fq * fq) % _TWO_PI

    def as_float_pair(self):
        if not self.exact:
            return (self.p, self.q)
        s = max(abs(self.p), abs(self.q))
        return (self.p / s, self.q / s)

    def __eq__(self, other):
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        if self.exact and other.exact:
            return self.p == other.p and self.q == other.q
        return same_point(self, other)

    def __hash__(self):
        if not self.exact:
            raise TypeError("float boundary points are not hashable; dedupe by angle")
        return hash((self.p, self.q))

    def __str__(self):
        if self.q == 0:
            return "inf"
        if self.exact:
            return "%d" % self.p if self.q == 1 else "%d/%d" % (self.p, self.q)
        return "%.6g" % (self.p / self.q)

    def __repr__(self):
        if self.exact:
            if self.q == 0:
                return "BoundaryPoint(inf)"
            if self.q == 1:
                return "BoundaryPoint(%d)" % self.p
            return "BoundaryPoint(%d/%d)" % (self.p, self.q)
        return "BoundaryPoint(%.12g, %.12g)" % (self.p, self.q)


def _canonical_int_pair(p, q):
    """Scale a rational pair to coprime ints, q > 0 or (q == 0 and p > 0)."""
    if isinstance(p, Fraction) or isinstance(q, Fraction):
        p = Fraction(p)
        q = Fraction(q)
        m = math.lcm(p.denominator, q.denominator)
        p = int(p * m)
        q = int(q * m)
    if p == 0 and q == 0:
        raise ValueError("degenerate projective pair (0, 0)")
    g = math.gcd(p, q)
    p //= g
    q //= g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return p, q


def same_point(a, b, eps=EPS_PT):
    """Whether two boundary points coincide, exactly or within eps.

    The float test is on the cross product of the unit representatives,
    which is the sine of the angle between the projective lines.
    """
    if a.exact and b.exact:
        return a.p == b.p and a.q == b.q
    ap, aq = a.as_float_pair()
    bp, bq = b.as_float_pair()
    return abs(ap * bq - aq * bp) <= eps


def cyclic_orient(a, b, c, eps=EPS_PT):
    """Cyclic orientation of three boundary points: +1 ccw, -1 cw, 0 degenerate.

    Uses the product of the three pairwise determinants
    D(u, v) = u.p * v.q - u.q * v.p, which is invariant under scaling any
    of the representatives (each sign flip hits two factors).  For exact
    points the answer is exact integer arithmetic.
    """
    if a.exact and b.exact and c.exact:
        d1 = a.p * b.q - a.q * b.p
        d2 = b.p * c.q - b.q * c.p
        d3 = c.p * a.q - c.q * a.p
        if d1 == 0 or d2 == 0 or d3 == 0:
            return 0
        s = (1 if d1 > 0 else -1) * (1 if d2 > 0 else -1) * (1 if d3 > 0 else -1)
        return s
    ap, aq = a.as_float_pair()
    bp, bq = b.as_float_pair()
    cp, cq = c.as_float_pair()
    d1 = ap * bq - aq * bp
    d2 = bp * cq - bq * cp
    d3 = cp * aq - cq * ap
    if abs(d1) <= eps or abs(d2) <= eps or abs(d3) <= eps:
        return 0
    return int(math.copysign(1.0, d1) * math.copysign(1.0, d2) * math.copysign(1.0, d3))


class Arc:
    """Open counterclockwise arc from start to end on the boundary circle."""

    __slots__ = ("start", "end")

    def __init__(self, start, end):
        self.start = start
        self.end = end

    def contains(self, point, eps=EPS_PT):
        return cyclic_orient(self.start, point, self.end, eps) > 0

    def __repr__(self):
        return "Arc(%r, %r)" % (self.start, self.end)


class MobiusTransform:
    """A real 2x2 matrix of determinant 1 acting on the boundary circle.

    Matrices with int or Fraction entries are exact; everything else is
    float.  Exact matrices must have determinant exactly 1.  A float matrix
    is rescaled to determinant 1 (a negative determinant is rejected, the
    boundary action must preserve orientation).
    """

    __slots__ = ("a", "b", "c", "d", "exact")

    def __init__(self, a, b, c, d):
        if all(_is_exact_scalar(x) for x in (a, b, c, d)):
            det = a * d - b * c
            if det != 1:
                raise ValueError("exact matrix must have determinant 1, got %r" % (det,))
            self.exact = True
        else:
            a = float(a)
            b = float(b)
            c = float(c)
            d = float(d)
            det = a * d - b * c
            if not det > 0.0:
                raise ValueError("matrix determinant must be positive, got %r" % (det,))
            r = math.sqrt(det)
            a /= r
            b /= r
            c /= r
            d /= r
            self.exact = False
        self.a = a
        self.b = b
        self.c = c
        self.d = d

    @staticmethod
    def identity():
        return MobiusTransform(1, 0, 0, 1)

    def apply(self, point):
        """Image of a boundary point. Exact when both inputs are exact."""
        p = self.a * point.p + self.b * point.q
        q = self.c * point.p + self.d * point.q
        return BoundaryPoint(p, q)

    def apply_real(self, x):
        return self.apply(BoundaryPoint.from_real(x)).as_real()

    def apply_complex(self, z):
        """Image of a point of the open upper half-plane."""
        return (self.a * z + self.b) / (self.c * z + self.d)

    def __mul__(self, other):
        if not isinstance(other, MobiusTransform):
            return NotImplemented
        return MobiusTransform(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return MobiusTransform(self.d, -self.b, -self.c, self.a)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def trace(self):
        return self.a + self.d

    def _psl_entries(self):
        """Entries normalised by the sign convention that fixes +/-g."""
        e = (self.a, self.b, self.c, self.d)
        if self.exact:
            for x in e:
                if x != 0:
                    return e if x > 0 else tuple(-y for y in e)
            return e
        i = max(range(4), key=lambda j: abs(e[j]))
        return e if e[i] > 0 else tuple(-y for y in e)

    def __eq__(self, other):
        if not isinstance(other, MobiusTransform):
            return NotImplemented
        if self.exact and other.exact:
            return self._psl_entries() == other._psl_entries()
        return same_transform(self, other)

    def __hash__(self):
        if not self.exact:
            raise TypeError("float transforms are not hashable")
        return hash(self._psl_entries())

    def is_identity(self, eps=EPS_MAT):
        if self.exact:
            return self._psl_entries() == (1, 0, 0, 1)
        e = self._psl_entries()
        return max(abs(e[0] - 1), abs(e[1]), abs(e[2]), abs(e[3] - 1)) <= eps

    def __repr__(self):
        return "MobiusTransform(%r, %r, %r, %r)" % (self.a, self.b, self.c, self.d)


def same_transform(g, h, eps=EPS_MAT):
    """Whether g and h agree as elements of PSL(2, R), entrywise within eps."""
    if g.exact and h.exact:
        return g._psl_entries() == h._psl_entries()
    ge = [float(x) for x in g._psl_entries()]
    he = [float(x) for x in h._psl_entries()]
    d_plus = max(abs(x - y) for x, y in zip(ge, he))
    d_minus = max(abs(x + y) for x, y in zip(ge, he))
    return min(d_plus, d_minus) <= eps


def psl_order(g, max_order=64, eps=EPS_MAT):
    """Order of g in PSL(2, R), or None if no power up to max_order is trivial."""
    acc = g
    for m in range(1, max_order + 1):
        if acc.is_identity(eps):
            return m
        acc = acc * g
    return None


def product(transforms):
    """Product g_1 g_2 ... g_k of a sequence of transforms (identity if empty)."""
    acc = MobiusTransform.identity()
    for g in transforms:
        acc = acc * g
    return acc


class Geodesic:
    """A complete geodesic of the half-plane, recorded by its endpoint pair."""

    __slots__ = ("u", "v")

    def __init__(self, u, v):
        if same_point(u, v):
            raise ValueError("geodesic endpoints must be distinct")
        self.u = u
        self.v = v

    def endpoints(self):
        return (self.u, self.v)

    def image(self, g):
        return Geodesic(g.apply(self.u), g.apply(self.v))

    def __repr__(self):
        return "Geodesic(%r, %r)" % (self.u, self.v)


def same_geodesic(g1, g2, eps=EPS_PT):
    """Whether two geodesics have the same endpoint set."""
    return (same_point(g1.u, g2.u, eps) and same_point(g1.v, g2.v, eps)) or (
        same_point(g1.u, g2.v, eps) and same_point(g1.v, g2.u, eps)
    )


def sort_points_by_angle(points):
    """Points sorted counterclockwise starting from infinity (angle 0)."""
    return sorted(points, key=BoundaryPoint.angle)


def dedupe_points(points, eps=EPS_PT):
    """Remove duplicates from a list of boundary points.

    Exact points are deduplicated exactly.  Float points are sorted by
    angle and merged when adjacent points coincide within eps; the wrap
    pair (last, first) is merged too.
    """
    exact = [pt for pt in points if pt.exact]
    rest = [pt for pt in points if not pt.exact]
    if not rest:
        out = []
        seen = set()
        for pt in exact:
            k = (pt.p, pt.q)
            if k not in seen:
                seen.add(k)
                out.append(pt)
        return out
    ordered = sort_points_by_angle(points)
    out = [ordered[0]]
    for pt in ordered[1:]:
        if not same_point(out[-1], pt, eps):
            out.append(pt)
    if len(out) > 1 and same_point(out[-1], out[0], eps):
        out.pop()
    return out
