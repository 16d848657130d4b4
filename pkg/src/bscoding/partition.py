"""Cut points and the interval partition of the boundary circle.

The cut point set consists of the endpoints of the side extension
geodesics together with the endpoints of every wall produced by the
corner walks around interior vertices.  Sorted counterclockwise these
points cut the circle into finitely many open intervals, the states of
the Markov coding.

For each letter e (an exterior side label) the set L(e) is the arc cut
off by the extension of the side named e, on the far side from the
domain.  Every interval lies in at least one and at most two of the
L(e); intervals in exactly two are called ambiguous, and the coding may
label them with either letter.

Around an interior vertex v the n(v) walls cut the circle into 2 n(v)
arcs which are graded by levels: the top arc, equal to the intersection
of the two L sets of the sides meeting at v, has level n(v), and the
level drops by one per step of cyclic distance from the top, reaching 0
on the arc opposite.  The crown C(v) collects the intervals of level at
least 2.  The sets M(e) (intervals lying in L(e) only) and A(e) (the
part of L(e) clear of the crowns at the endpoints of the side named e)
are the combinatorial ingredients of the stronger coding hypotheses.
"""

from bscoding.exceptions import CodingError, VerificationError
from bscoding.moebius import (
    EPS_PT,
    Arc,
    same_geodesic,
    same_point,
    sort_points_by_angle,
)


def arc_beyond(geodesic, p0):
    """The open boundary arc on the far side of a geodesic from the point p0.

    The returned Arc reuses the geodesic's endpoint objects, so exact
    endpoints stay exact; only the orientation decision uses floats.
    """
    u, v = geodesic.endpoints()
    fu = None if u.q == 0 else float(u.p) / float(u.q)
    fv = None if v.q == 0 else float(v.p) / float(v.q)
    if fu is None or fv is None:
        finite_pt, finite_x = (v, fv) if fu is None else (u, fu)
        inf_pt = u if fu is None else v
        if p0.real < finite_x:
            return Arc(finite_pt, inf_pt)
        return Arc(inf_pt, finite_pt)
    c = 0.5 * (fu + fv)
    r = 0.5 * abs(fu - fv)
    left, right = (u, v) if fu < fv else (v, u)
    if abs(p0 - c) < r:
        # domain sits under the arc of the circle: beyond wraps through infinity
        return Arc(right, left)
    return Arc(left, right)


def _letter_key(name):
    """Tie-break order for ambiguous intervals: lowercase before uppercase."""
    return (name.lower(), 1 if name.isupper() else 0)


class BoundaryPartition:
    """The interval partition of the circle induced by a fundamental domain."""

    def __init__(self, domain):
        self.domain = domain
        cycles = domain.vertex_cycles()

        by_name = {}
        for side in domain.sides:
            by_name.setdefault(side.name, []).append(side)
        for name, sides in by_name.items():
            for other in sides[1:]:
                if not same_geodesic(sides[0].geodesic, other.geodesic, EPS_PT * 1e3):
                    raise CodingError(
                        "letter %r labels sides on different geodesics" % name
                    )
        self.letter_sides = by_name
        self.letter_arcs = {
            name: arc_beyond(sides[0].geodesic, domain.interior_point)
            for name, sides in by_name.items()
        }

        points = []
        for side in domain.sides:
            points.extend(side.geodesic.endpoints())
        for cyc in cycles:
            for wall in cyc.distinct_walls:
                points.extend(wall.endpoints())
        points = self._dedupe(points)
        self.cut_points = sort_points_by_angle(points)
        self.size = len(self.cut_points)
        self.intervals = [
            Arc(self.cut_points[i], self.cut_points[(i + 1) % self.size])
            for i in range(self.size)
        ]
        self.exact = all(p.exact for p in self.cut_points)

        self.L = {
            name: self._intervals_in(arc) for name, arc in self.letter_arcs.items()
        }
        options = [[] for _ in range(self.size)]
        for name in sorted(self.L, key=_letter_key):
            for i in self.L[name]:
                options[i].append(name)
        for i, opts in enumerate(options):
            if not opts:
                raise CodingError("interval %d lies in no L set" % i)
            if len(opts) > 2:
                raise CodingError(
                    "interval %d lies in %d L sets: %r" % (i, len(opts), opts)
                )
        self.letter_options = [tuple(opts) for opts in options]
        self.ambiguous = frozenset(
            i for i, opts in enumerate(self.letter_options) if len(opts) == 2
        )

        self.vertex_levels = {}
        self.crowns = {}
        self.top_arcs = {}
        for cyc in cycles:
            self._grade_vertex(cyc)

        self.M = {}
        self.A = {}
        for name in self.L:
            self.M[name] = frozenset(
                i for i in self.L[name] if len(self.letter_options[i]) == 1
            )
            shadow = set()
            for side in by_name[name]:
                for vidx in (side.tail, side.head):
                    shadow |= self.crowns.get(vidx, frozenset())
            self.A[name] = frozenset(self.L[name]) - shadow

    def _dedupe(self, points):
        if all(p.exact for p in points):
            seen = set()
            out = []
            for p in points:
                key = (p.p, p.q)
                if key not in seen:
                    seen.add(key)
                    out.append(p)
            return out
        ordered = sort_points_by_angle(points)
        out = [ordered[0]]
        for p in ordered[1:]:
            if not same_point(out[-1], p):
                out.append(p)
        if len(out) > 1 and same_point(out[-1], out[0]):
            out.pop()
        return out

    def _point_index(self, pt):
        """Index of pt in the cut point list, or None."""
        for i, c in enumerate(self.cut_points):
            if same_point(c, pt):
                return i
        return None

    def _intervals_in(self, arc):
        """Indices of the partition intervals contained in the given arc.

        Arc endpoints must be cut points, so an interval is inside exactly
        when its left endpoint lies in the half-open arc [start, end).
        """
        out = []
        for i in range(self.size):
            left = self.cut_points[i]
            if same_point(left, arc.start) or arc.contains(left):
                out.append(i)
        return frozenset(out)

    def locate(self, point):
        """Index of the interval containing the point, or None on a cut point."""
        for i, arc in enumerate(self.intervals):
            if arc.contains(point):
                return i
        return None

    def _grade_vertex(self, cyc):
        v = cyc.vertex
        n = cyc.n
        ends = []
        for wall in cyc.distinct_walls:
            ends.extend(wall.endpoints())
        ends = sort_points_by_angle(self._dedupe(ends))
        if len(ends) != 2 * n:
            raise VerificationError(
                "vertex %d: expected %d wall endpoints, found %d" % (v, 2 * n, len(ends))
            )
        arcs = [Arc(ends[i], ends[(i + 1) % len(ends)]) for i in range(len(ends))]
        arc_of_interval = []
        for i in range(self.size):
            left = self.cut_points[i]
            hit = None
            for j, arc in enumerate(arcs):
                if same_point(left, arc.start) or arc.contains(left):
                    hit = j
                    break
            if hit is None:
                raise CodingError(
                    "interval %d is not covered by the wall arcs at vertex %d" % (i, v)
                )
            arc_of_interval.append(hit)

        nsides = self.domain.n_sides
        d_name = self.domain.names[(v - 1) % nsides]
        e_name = self.domain.names[v]
        top_set = frozenset(self.L[d_name]) & frozenset(self.L[e_name])
        if not top_set:
            raise VerificationError(
                "L(%s) and L(%s) do not meet at vertex %d" % (d_name, e_name, v)
            )
        top = arc_of_interval[min(top_set)]
        covered = frozenset(
            i for i in range(self.size) if arc_of_interval[i] == top
        )
        if covered != top_set:
            raise CodingError(
                "top arc at vertex %d is %r but L(%s) & L(%s) is %r"
                % (v, sorted(covered), d_name, e_name, sorted(top_set))
            )
        m = len(arcs)
        levels = []
        for i in range(self.size):
            dist = (arc_of_interval[i] - top) % m
            dist = min(dist, m - dist)
            levels.append(n - dist)
        self.vertex_levels[v] = levels
        self.crowns[v] = frozenset(i for i in range(self.size) if levels[i] >= 2)
        self.top_arcs[v] = top_set

    def __repr__(self):
        return "BoundaryPartition(%d intervals, letters %s)" % (
            self.size,
            "".join(sorted(self.L)),
        )
