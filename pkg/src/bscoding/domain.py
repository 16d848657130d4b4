"""Fundamental polygons with side pairings.

A fundamental domain is a finite geodesic polygon in the upper half-plane
together with a pairing of its sides by group elements.  Sides are listed
counterclockwise: side k runs from vertex k to vertex k+1 (mod N), with
the interior of the polygon on the left.  A vertex is either an interior
point of the half-plane (a complex number) or an ideal point on the
boundary circle.

Labelling conventions.  Each side sigma carries two group elements:

* the interior label e = label(sigma): the element for which e(sigma) is
  again a side of the polygon, and for which the copy e^{-1} R of the
  domain R is the neighbour of R across sigma;
* the exterior label ext(sigma) = e^{-1}: crossing sigma from inside R
  lands in ext(sigma) R.  Boundary expansions emit exterior labels, and a
  side's name refers to its exterior label throughout the package.

An orientation preserving pairing reverses the induced boundary
orientation, so label(sigma) sends the tail of sigma to the head of the
partner side and the head to the partner's tail.  A side may be paired
with itself when its label is an involution rotating the side onto
itself about a fixed point in the middle of the side.

Side geodesics are stored directed: the first endpoint lies behind the
tail of the side and the second beyond the head.  For arithmetic groups
the endpoints can be supplied exactly (ints or Fractions) and every
derived quantity that only involves boundary points stays exact.

Corner walks.  Around each interior vertex the standard corner cycle is
run combinatorially: from a corner (sigma, u) the pairing label of sigma
moves u to a vertex u' of the partner side, and the walk continues at the
other side incident to u'.  The emitted exterior labels form the cycle
word, whose period p and order m of the period product give the vertex
relation word^m = 1 and the integer n(v) = p m / 2.  The walk also
produces the 2 n(v) separating geodesics ("walls") between consecutive
copies of R around the vertex; the even corner condition states that they
form exactly n(v) distinct geodesics, each occurring twice.
"""

import cmath
import json
import math
from fractions import Fraction

from bscoding.exceptions import GeometryError, VerificationError
from bscoding.moebius import (
    EPS_MAT,
    BoundaryPoint,
    Geodesic,
    MobiusTransform,
    psl_order,
    same_geodesic,
    same_point,
    same_transform,
)

# Geodesic and endpoint matching tolerance for float input data.
EPS_GEO = 1e-9

# Vertex angle sums are computed from float vertex coordinates and trig,
# so they get a looser tolerance than algebraic identities.
EPS_ANGLE = 1e-6

# Relative size of the outward nudge used by the side crossing check.
_NUDGE = 1e-3


class Side:
    """One side of the polygon, with its pairing data."""

    __slots__ = ("index", "tail", "head", "geodesic", "label", "ext", "name", "partner")

    def __init__(self, index, tail, head, geodesic, label, name, partner):
        self.index = index
        self.tail = tail
        self.head = head
        self.geodesic = geodesic
        self.label = label
        self.ext = label.inverse()
        self.name = name
        self.partner = partner

    def __repr__(self):
        return "Side(%d: v%d->v%d, ext=%s)" % (self.index, self.tail, self.head, self.name)


class VertexCycle:
    """Corner walk data for one interior vertex."""

    __slots__ = (
        "vertex",
        "pivots",
        "side_indices",
        "period",
        "multiplier",
        "n",
        "letters_period",
        "letters",
        "walls",
        "distinct_walls",
        "angle_sum",
    )

    def __init__(self, **kw):
        for f in self.__slots__:
            setattr(self, f, kw[f])

    def orbit(self):
        return frozenset(self.pivots)

    def __repr__(self):
        return "VertexCycle(v%d: p=%d, m=%d, n=%d, word=%s)" % (
            self.vertex,
            self.period,
            self.multiplier,
            self.n,
            "".join(self.letters_period),
        )


def _parse_vertex(v):
    """Classify a vertex position as ('ideal', BoundaryPoint) or ('interior', complex)."""
    if isinstance(v, BoundaryPoint):
        return ("ideal", v)
    if isinstance(v, complex):
        if v.imag <= 0:
            raise GeometryError("interior vertex %r must have positive imaginary part" % (v,))
        return ("interior", v)
    if isinstance(v, float) and math.isinf(v):
        return ("ideal", BoundaryPoint.infinity())
    if isinstance(v, (int, float, Fraction)):
        return ("ideal", BoundaryPoint.from_real(v))
    raise GeometryError("cannot interpret vertex position %r" % (v,))


def _vertex_float(kind, pos):
    """Vertex position as a complex number, with None for the ideal point at infinity."""
    if kind == "interior":
        return pos
    if pos.q == 0:
        return None
    return complex(pos.p / pos.q, 0.0)


class FundamentalDomain:
    """A side-paired geodesic polygon generating a Fuchsian group."""

    def __init__(self, vertices, pairing, labels, names, geodesics=None, interior_point=None):
        n = len(vertices)
        if n < 3:
            raise GeometryError("need at least 3 sides, got %d" % n)
        if not (len(pairing) == len(labels) == len(names) == n):
            raise GeometryError("vertices, pairing, labels and names must have equal length")
        self.n_sides = n
        self.pairing = list(pairing)
        for k in range(n):
            kb = self.pairing[k]
            if not (0 <= kb < n) or self.pairing[kb] != k:
                raise GeometryError("pairing is not an involution at side %d" % k)
        self.labels = list(labels)
        for k in range(n):
            if not same_transform(self.labels[self.pairing[k]], self.labels[k].inverse()):
                raise GeometryError(
                    "label of side %d is not inverse to label of its partner %d"
                    % (k, self.pairing[k])
                )
        self.names = [str(x) for x in names]

        parsed = [_parse_vertex(v) for v in vertices]
        self.vertex_kinds = [kind for kind, _ in parsed]
        self.vertex_positions = [pos for _, pos in parsed]

        if interior_point is None:
            pts = [p for k, p in zip(self.vertex_kinds, self.vertex_positions) if k == "interior"]
            if not pts:
                raise GeometryError("interior_point is required for an ideal polygon")
            interior_point = sum(pts) / len(pts)
        self.interior_point = complex(interior_point)
        if self.interior_point.imag <= 0:
            raise GeometryError("interior point must lie in the upper half-plane")

        computed = [self._side_geodesic(k) for k in range(n)]
        if geodesics is None:
            directed = computed
        else:
            if len(geodesics) != n:
                raise GeometryError("need one geodesic per side")
            directed = []
            for k, pair in enumerate(geodesics):
                u, v = pair
                if not isinstance(u, BoundaryPoint):
                    u = BoundaryPoint.from_real(u)
                if not isinstance(v, BoundaryPoint):
                    v = BoundaryPoint.from_real(v)
                a, b = computed[k].endpoints()
                if same_point(u, a, EPS_GEO) and same_point(v, b, EPS_GEO):
                    directed.append(Geodesic(u, v))
                elif same_point(v, a, EPS_GEO) and same_point(u, b, EPS_GEO):
                    directed.append(Geodesic(v, u))
                else:
                    raise GeometryError(
                        "supplied geodesic for side %d does not match its endpoints" % k
                    )

        self.sides = [
            Side(k, k, (k + 1) % n, directed[k], self.labels[k], self.names[k], self.pairing[k])
            for k in range(n)
        ]
        self._cycles = None

    # ------------------------------------------------------------------
    # geometry helpers

    def _side_geodesic(self, k):
        """Directed geodesic through side k, computed from vertex positions."""
        n = self.n_sides
        tk, tp = self.vertex_kinds[k], self.vertex_positions[k]
        hk, hp = self.vertex_kinds[(k + 1) % n], self.vertex_positions[(k + 1) % n]
        if tk == "ideal" and hk == "ideal":
            if same_point(tp, hp, EPS_GEO):
                raise GeometryError("side %d has coinciding ideal endpoints" % k)
            return Geodesic(tp, hp)
        if tk == "ideal":
            z = hp
            if tp.q == 0:
                return Geodesic(tp, BoundaryPoint.from_real(z.real))
            x = tp.p / tp.q
            if abs(z.real - x) <= EPS_GEO * max(1.0, abs(z)):
                return Geodesic(tp, BoundaryPoint.infinity())
            c = (abs(z) ** 2 - x * x) / (2.0 * (z.real - x))
            return Geodesic(tp, BoundaryPoint.from_real(2.0 * c - x))
        if hk == "ideal":
            z = tp
            if hp.q == 0:
                return Geodesic(BoundaryPoint.from_real(z.real), hp)
            x = hp.p / hp.q
            if abs(z.real - x) <= EPS_GEO * max(1.0, abs(z)):
                return Geodesic(BoundaryPoint.infinity(), hp)
            c = (abs(z) ** 2 - x * x) / (2.0 * (z.real - x))
            return Geodesic(BoundaryPoint.from_real(2.0 * c - x), hp)
        z1, z2 = tp, hp
        scale = max(1.0, abs(z1), abs(z2))
        if abs(z1.real - z2.real) <= EPS_GEO * scale:
            x = 0.5 * (z1.real + z2.real)
            if z2.imag > z1.imag:
                return Geodesic(BoundaryPoint.from_real(x), BoundaryPoint.infinity())
            return Geodesic(BoundaryPoint.infinity(), BoundaryPoint.from_real(x))
        c = (abs(z1) ** 2 - abs(z2) ** 2) / (2.0 * (z1.real - z2.real))
        r = abs(z1 - c)
        ph1 = math.atan2(z1.imag, z1.real - c)
        ph2 = math.atan2(z2.imag, z2.real - c)
        if ph2 < ph1:
            return Geodesic(BoundaryPoint.from_real(c - r), BoundaryPoint.from_real(c + r))
        return Geodesic(BoundaryPoint.from_real(c + r), BoundaryPoint.from_real(c - r))

    def _geodesic_sides(self, geodesic, z):
        """Signed position of complex z relative to a geodesic (circle or line)."""
        u, v = geodesic.endpoints()
        uu = None if u.q == 0 else u.p / u.q
        vv = None if v.q == 0 else v.p / v.q
        if uu is None or vv is None:
            x = vv if uu is None else uu
            return z.real - float(x)
        c = 0.5 * float(uu + vv)
        r = 0.5 * abs(float(uu - vv))
        return abs(z - c) - r

    def contains_interior(self, z):
        """Whether complex z lies inside the open polygon."""
        z = complex(z)
        if z.imag <= 0:
            return False
        for side in self.sides:
            s0 = self._geodesic_sides(side.geodesic, self.interior_point)
            s1 = self._geodesic_sides(side.geodesic, z)
            if s0 == 0.0 or (s0 > 0) != (s1 > 0):
                return False
        return True

    def _side_sample_point(self, k):
        """A point roughly in the middle of side k."""
        side = self.sides[k]
        u, v = side.geodesic.endpoints()
        uu = None if u.q == 0 else float(u.p / u.q)
        vv = None if v.q == 0 else float(v.p / v.q)
        n = self.n_sides
        ends = []
        for vidx in (side.tail, side.head):
            zf = _vertex_float(self.vertex_kinds[vidx], self.vertex_positions[vidx])
            ends.append(zf)
        if uu is None or vv is None:
            x = vv if uu is None else uu
            ys = [e.imag for e in ends if e is not None and e.imag > 0]
            if len(ys) == 2:
                y = math.sqrt(ys[0] * ys[1])
            elif len(ys) == 1:
                # other endpoint is ideal: halfway toward infinity or the axis
                y = 2.0 * ys[0] if None in ends else 0.5 * ys[0]
            else:
                y = 1.0 + abs(x)
            return complex(x, y)
        c = 0.5 * (uu + vv)
        r = 0.5 * abs(uu - vv)
        phis = []
        for e in ends:
            if e is None:
                raise GeometryError("side %d on a circle cannot end at infinity" % k)
            if e.imag <= 0.0:
                phis.append(0.0 if e.real > c else math.pi)
            else:
                phis.append(math.atan2(e.imag, e.real - c))
        phi = 0.5 * (phis[0] + phis[1])
        return c + r * cmath.exp(1j * phi)

    def _push_outward(self, k, z):
        """Nudge a point of side k off the side, away from the interior."""
        side = self.sides[k]
        u, v = side.geodesic.endpoints()
        uu = None if u.q == 0 else float(u.p / u.q)
        vv = None if v.q == 0 else float(v.p / v.q)
        p0 = self.interior_point
        if uu is None or vv is None:
            x = vv if uu is None else uu
            step = _NUDGE * max(1.0, abs(z))
            return z + (step if p0.real < x else -step)
        c = 0.5 * (uu + vv)
        r = 0.5 * abs(uu - vv)
        inside = abs(p0 - c) < r
        factor = 1.0 + _NUDGE if inside else 1.0 - _NUDGE
        return c + (z - c) * factor

    # ------------------------------------------------------------------
    # corner walks

    def _walk_from(self, v0):
        n = self.n_sides
        start = ((v0 - 1) % n, v0)
        state = start
        corners = []
        while True:
            corners.append(state)
            k, u = state
            kb = self.pairing[k]
            if u == self.sides[k].tail:
                u2 = self.sides[kb].head
            else:
                u2 = self.sides[kb].tail
            if self.vertex_kinds[u2] != "interior":
                raise GeometryError(
                    "corner walk at vertex %d reached ideal vertex %d" % (v0, u2)
                )
            ending, starting = (u2 - 1) % n, u2
            if kb == ending:
                nxt = starting
            elif kb == starting:
                nxt = ending
            else:
                raise GeometryError(
                    "pairing correspondence broken: side %d not incident to vertex %d" % (kb, u2)
                )
            state = (nxt, u2)
            if state == start:
                break
            if len(corners) > n:
                raise GeometryError("corner walk at vertex %d does not close" % v0)
        p = len(corners)
        letters_period = tuple(self.names[k] for k, _ in corners)
        g = MobiusTransform.identity()
        for k, _ in corners:
            g = g * self.sides[k].ext
        m = psl_order(g, max_order=256)
        if m is None:
            raise VerificationError(
                "vertex cycle product at vertex %d has no small finite order" % v0
            )
        if (p * m) % 2 != 0:
            raise VerificationError(
                "vertex %d has odd corner count p*m = %d" % (v0, p * m)
            )
        nn = (p * m) // 2
        walls = []
        prefix = MobiusTransform.identity()
        for j in range(2 * nn):
            k, _ = corners[j % p]
            walls.append(self.sides[k].geodesic.image(prefix))
            prefix = prefix * self.sides[k].ext
        distinct = []
        counts = []
        for w in walls:
            for i, d in enumerate(distinct):
                if same_geodesic(w, d, EPS_GEO):
                    counts[i] += 1
                    break
            else:
                distinct.append(w)
                counts.append(1)
        if len(distinct) != nn or any(c != 2 for c in counts):
            raise VerificationError(
                "even corner condition fails at vertex %d: %d walls split as %r"
                % (v0, 2 * nn, counts)
            )
        angle_sum = sum(self._corner_angle(u) for _, u in corners)
        return VertexCycle(
            vertex=v0,
            pivots=tuple(u for _, u in corners),
            side_indices=tuple(corners[j % p][0] for j in range(2 * nn)),
            period=p,
            multiplier=m,
            n=nn,
            letters_period=letters_period,
            letters=letters_period * m,
            walls=walls,
            distinct_walls=distinct,
            angle_sum=angle_sum,
        )

    def _tangent_toward(self, k, vidx):
        """Unit tangent at vertex vidx along side k, pointing into the side."""
        side = self.sides[k]
        z = _vertex_float(self.vertex_kinds[vidx], self.vertex_positions[vidx])
        other = side.head if vidx == side.tail else side.tail
        zo = _vertex_float(self.vertex_kinds[other], self.vertex_positions[other])
        u, v = side.geodesic.endpoints()
        uu = None if u.q == 0 else float(u.p / u.q)
        vv = None if v.q == 0 else float(v.p / v.q)
        if uu is None or vv is None:
            if zo is None:
                return 1j
            if zo.imag == 0.0 or zo.imag < z.imag:
                return -1j
            return 1j
        c = 0.5 * (uu + vv)
        r = 0.5 * abs(uu - vv)
        t = 1j * (z - c) / r
        phi = math.atan2(z.imag, z.real - c)
        if zo is None:
            raise GeometryError("side %d on a circle cannot end at infinity" % k)
        if zo.imag <= 0.0:
            phi_o = 0.0 if zo.real > c else math.pi
        else:
            phi_o = math.atan2(zo.imag, zo.real - c)
        return t if phi_o > phi else -t

    def _corner_angle(self, vidx):
        """Interior angle of the polygon at an interior vertex."""
        n = self.n_sides
        t_in = self._tangent_toward((vidx - 1) % n, vidx)
        t_out = self._tangent_toward(vidx, vidx)
        ratio = t_out / t_in
        return abs(math.atan2(ratio.imag, ratio.real))

    def vertex_cycles(self):
        """Corner walk data for every interior vertex (cached)."""
        if self._cycles is None:
            self._cycles = [
                self._walk_from(v)
                for v in range(self.n_sides)
                if self.vertex_kinds[v] == "interior"
            ]
        return self._cycles

    def orbit_representatives(self):
        """One vertex cycle per orbit of interior vertices."""
        reps = []
        seen = set()
        for cyc in self.vertex_cycles():
            if cyc.orbit() not in seen:
                seen.add(cyc.orbit())
                reps.append(cyc)
        return reps

    # ------------------------------------------------------------------
    # alphabet

    def generators(self):
        """Mapping from letter name to the exterior label it denotes."""
        out = {}
        for side in self.sides:
            if side.name in out:
                if not same_transform(out[side.name], side.ext):
                    raise GeometryError(
                        "letter %r names two different transforms" % side.name
                    )
            else:
                out[side.name] = side.ext
        return out

    def name_involution(self):
        """Mapping from each letter name to the name of its inverse."""
        inv = {}
        for k in range(self.n_sides):
            a = self.names[k]
            b = self.names[self.pairing[k]]
            if inv.get(a, b) != b:
                raise GeometryError("inconsistent inverse names for letter %r" % a)
            inv[a] = b
        return inv

    # ------------------------------------------------------------------
    # verification

    def verify(self):
        """Run the full battery of structural checks.

        Raises GeometryError or VerificationError on failure and returns a
        small report dict on success.
        """
        gens = self.generators()
        inv = self.name_involution()
        names = sorted(gens)
        for a in names:
            if inv[inv[a]] != a:
                raise GeometryError("name involution is not an involution at %r" % a)
            if not same_transform(gens[inv[a]], gens[a].inverse()):
                raise GeometryError("letter %r is not named as the inverse of %r" % (inv[a], a))
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                if same_transform(gens[a], gens[b]):
                    raise GeometryError("letters %r and %r name the same transform" % (a, b))

        for side in self.sides:
            partner = self.sides[side.partner]
            img = side.geodesic.image(side.label)
            if not same_geodesic(img, partner.geodesic, EPS_GEO):
                raise GeometryError(
                    "label of side %d does not map its geodesic to side %d"
                    % (side.index, partner.index)
                )
            a, b = side.geodesic.endpoints()
            pa, pb = partner.geodesic.endpoints()
            if not (
                same_point(side.label.apply(a), pb, EPS_GEO)
                and same_point(side.label.apply(b), pa, EPS_GEO)
            ):
                raise GeometryError(
                    "label of side %d does not reverse orientation onto side %d"
                    % (side.index, partner.index)
                )

        if not self.contains_interior(self.interior_point):
            raise GeometryError("reference interior point is not inside the polygon")

        for side in self.sides:
            z = self._side_sample_point(side.index)
            z_out = self._push_outward(side.index, z)
            if self.contains_interior(z_out):
                raise GeometryError(
                    "outward nudge at side %d stayed inside the polygon" % side.index
                )
            z_in = side.label.apply_complex(z_out)
            if not self.contains_interior(z_in):
                raise GeometryError(
                    "interior label of side %d does not map its outside back into the"
                    " polygon; interior and exterior labels are probably swapped"
                    % side.index
                )

        cycles = self.vertex_cycles()
        for cyc in cycles:
            total = cyc.angle_sum * cyc.multiplier
            if abs(total - 2.0 * math.pi) > EPS_ANGLE:
                raise VerificationError(
                    "angle sum around vertex %d is %.9f * %d, expected 2*pi"
                    % (cyc.vertex, cyc.angle_sum, cyc.multiplier)
                )
        reps = self.orbit_representatives()
        return {
            "n_sides": self.n_sides,
            "letters": names,
            "interior_vertices": len(cycles),
            "vertex_orbits": len(reps),
            "orbit_words": ["".join(c.letters_period) for c in reps],
            "orbit_n": [c.n for c in reps],
        }

    # ------------------------------------------------------------------
    # serialisation

    def to_dict(self):
        def num(x):
            if isinstance(x, bool):
                raise TypeError
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction):
                return "%d/%d" % (x.numerator, x.denominator)
            return float(x)

        def vert(kind, pos):
            if kind == "ideal":
                return {"ideal": [num(pos.p), num(pos.q)]}
            return {"point": [pos.real, pos.imag]}

        return {
            "vertices": [vert(k, p) for k, p in zip(self.vertex_kinds, self.vertex_positions)],
            "pairing": list(self.pairing),
            "labels": [[num(x) for x in g.entries()] for g in self.labels],
            "names": list(self.names),
            "geodesics": [
                [[num(s.geodesic.u.p), num(s.geodesic.u.q)], [num(s.geodesic.v.p), num(s.geodesic.v.q)]]
                for s in self.sides
            ],
            "interior_point": [self.interior_point.real, self.interior_point.imag],
        }

    @staticmethod
    def from_dict(data):
        def num(x):
            if isinstance(x, str):
                a, _, b = x.partition("/")
                return Fraction(int(a), int(b)) if b else Fraction(int(a))
            return x

        def vert(d):
            if "ideal" in d:
                p, q = (num(x) for x in d["ideal"])
                return BoundaryPoint(p, q)
            x, y = d["point"]
            return complex(x, y)

        vertices = [vert(d) for d in data["vertices"]]
        labels = [MobiusTransform(*(num(x) for x in row)) for row in data["labels"]]
        geodesics = [
            (BoundaryPoint(num(u[0]), num(u[1])), BoundaryPoint(num(v[0]), num(v[1])))
            for u, v in data["geodesics"]
        ]
        ip = complex(*data["interior_point"])
        return FundamentalDomain(
            vertices, data["pairing"], labels, data["names"], geodesics, ip
        )

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=1)

    @staticmethod
    def load(path):
        with open(path) as fh:
            return FundamentalDomain.from_dict(json.load(fh))

    def __repr__(self):
        return "FundamentalDomain(%d sides, letters %s)" % (
            self.n_sides,
            "".join(sorted(self.generators())),
        )


# ----------------------------------------------------------------------
# presets


def sl2z_domain():
    """The modular group PSL(2, Z) on its standard fundamental domain.

    The polygon has an ideal vertex at infinity, elliptic vertices of
    order 3 at rho = exp(2 pi i / 3) and rho + 1, and an elliptic vertex
    of order 2 at i where the unit circle arc is split into two sides.
    Letters: t is z -> z + 1, T its inverse, s is z -> -1/z.
    """
    t = MobiusTransform(1, 1, 0, 1)
    T = MobiusTransform(1, -1, 0, 1)
    s = MobiusTransform(0, -1, 1, 0)
    rho = complex(-0.5, 0.5 * math.sqrt(3.0))
    vertices = [BoundaryPoint.infinity(), rho, 1j, rho + 1]
    pairing = [3, 2, 1, 0]
    labels = [t, s, s, T]
    names = ["T", "s", "s", "t"]
    half = Fraction(1, 2)
    geodesics = [
        (BoundaryPoint.infinity(), BoundaryPoint.from_real(-half)),
        (BoundaryPoint.from_real(-1), BoundaryPoint.from_real(1)),
        (BoundaryPoint.from_real(-1), BoundaryPoint.from_real(1)),
        (BoundaryPoint.from_real(half), BoundaryPoint.infinity()),
    ]
    return FundamentalDomain(vertices, pairing, labels, names, geodesics, 2j)


def ideal_triangle_domain():
    """Ideal triangle with each side rotated onto itself by a half-turn.

    The group is the free product of three elliptic involutions whose
    fixed points sit in the middle of the three sides.  All vertices are
    ideal, so there are no vertex cycles and the cut point set consists of
    the three ideal vertices alone.
    """
    a = MobiusTransform(0, -1, 1, 0)
    b = MobiusTransform(1, -1, 2, -1)
    c = MobiusTransform(1, -2, 1, -1)
    vertices = [BoundaryPoint.infinity(), BoundaryPoint.from_real(0), BoundaryPoint.from_real(1)]
    pairing = [0, 1, 2]
    labels = [a, b, c]
    names = ["a", "b", "c"]
    return FundamentalDomain(
        vertices, pairing, labels, names, interior_point=complex(0.5, 1.0)
    )


def _half_turn(z0):
    x, y = z0.real, z0.imag
    return MobiusTransform(x / y, -(x * x + y * y) / y, 1.0 / y, -x / y)


def surface_domain(genus=2):
    """Regular 4g-gon with opposite sides paired: a genus g surface group.

    All 4g vertices lie in one orbit with corner angle pi / (2 g), giving
    the single surface relation of length 4g.  The pairing of side j with
    side j + 2g is the composition of the half-turn about the midpoint of
    side j with the half-turn about the centre of the polygon.
    Generators are named a, b, c, ... with capital letters for inverses.
    """
    if genus < 2:
        raise GeometryError("genus must be at least 2")
    n = 4 * genus
    letters = "abcdefghijklmnopqrstuvwxyz"
    if 2 * genus > len(letters):
        raise GeometryError("genus too large to name generators with single letters")
    cot = 1.0 / math.tan(math.pi / n)
    radius_v = math.tanh(0.5 * math.acosh(cot * cot))
    radius_f = math.tanh(0.5 * math.acosh(cot))

    def to_half_plane(w):
        return 1j * (1.0 + w) / (1.0 - w)

    vertices = [to_half_plane(radius_v * cmath.exp(2j * math.pi * j / n)) for j in range(n)]
    feet = [
        to_half_plane(radius_f * cmath.exp(2j * math.pi * (j + 0.5) / n)) for j in range(n)
    ]
    centre_turn = _half_turn(1j)
    labels = [centre_turn * _half_turn(feet[j]) for j in range(n)]
    pairing = [(j + 2 * genus) % n for j in range(n)]
    names = []
    for j in range(n):
        if j < 2 * genus:
            names.append(letters[j].upper())
        else:
            names.append(letters[j - 2 * genus])
    return FundamentalDomain(vertices, pairing, labels, names, interior_point=1j)


PRESETS = {
    "sl2z": sl2z_domain,
    "triangle": ideal_triangle_domain,
    "octagon": surface_domain,
}


def get_preset(name):
    if name not in PRESETS:
        raise KeyError("unknown preset %r, have %s" % (name, ", ".join(sorted(PRESETS))))
    return PRESETS[name]()
