"""The Markov coding: interval labels, the boundary map, transitions.

Every interval I carries a letter e with I inside L(e); the coding map on
I is the inverse of that letter, which strips the leading symbol of the
boundary expansion.  Images of intervals are unions of whole intervals
(the Markov property), so the map is described by a 0-1 transition matrix
p[i][j] = 1 iff f(I_i) contains I_j, and the image of each interval is a
contiguous counterclockwise run of intervals.

Intervals lying in two L sets may be labelled with either letter.  The
default takes the first letter in the partition's tie-break order;
explicit overrides are accepted per interval, which changes the coding
(and its transition matrix) without changing the partition.
"""

import numpy as np

from bscoding.exceptions import CodingError
from bscoding.partition import BoundaryPartition


class MarkovCoding:
    """Interval labelling plus transition structure for a partition."""

    def __init__(self, partition, choices=None):
        if not isinstance(partition, BoundaryPartition):
            partition = BoundaryPartition(partition)
        self.partition = partition
        self.domain = partition.domain
        self.size = partition.size

        overrides = dict(choices or {})
        letters = []
        for i in range(self.size):
            opts = partition.letter_options[i]
            if i in overrides:
                name = overrides.pop(i)
                if name not in opts:
                    raise CodingError(
                        "interval %d cannot be labelled %r, options are %r"
                        % (i, name, opts)
                    )
            else:
                name = opts[0]
            letters.append(name)
        if overrides:
            raise CodingError("choices refer to unknown intervals %r" % sorted(overrides))
        self.letters = tuple(letters)

        gens = self.domain.generators()
        self.letter_matrices = gens
        self.step_matrices = tuple(gens[name].inverse() for name in letters)

        succ = []
        runs = []
        for i in range(self.size):
            run = self._branch_run(i, self.step_matrices[i])
            runs.append(run)
            start, length = run
            succ.append(tuple((start + k) % self.size for k in range(length)))
        self.successors = tuple(succ)
        self.image_runs = tuple(runs)

    def _branch_run(self, i, g):
        """Image of interval i under g as a run (start index, length)."""
        part = self.partition
        arc = part.intervals[i]
        a = g.apply(arc.start)
        b = g.apply(arc.end)
        ia = part._point_index(a)
        ib = part._point_index(b)
        if ia is None or ib is None:
            raise CodingError(
                "image of interval %d has an endpoint outside the cut point set" % i
            )
        length = (ib - ia) % self.size
        if length == 0:
            raise CodingError("image of interval %d is degenerate" % i)
        return (ia, length)

    def transition_matrix(self):
        P = np.zeros((self.size, self.size), dtype=np.uint8)
        for i, row in enumerate(self.successors):
            for j in row:
                P[i, j] = 1
        return P

    def branch_counts(self):
        return [len(row) for row in self.successors]

    def expand(self, point, length):
        """First `length` letters of the boundary expansion of a point."""
        word = []
        for _ in range(length):
            i = self.partition.locate(point)
            if i is None:
                raise CodingError("expansion hit a cut point at %r" % (point,))
            word.append(self.letters[i])
            point = self.step_matrices[i].apply(point)
        return tuple(word)

    # ------------------------------------------------------------------
    # structural lemmas

    def verify(self):
        """Check the Markov structure lemmas; returns a report dict.

        Raises CodingError when images fail to decompose into whole
        intervals, when crown intervals do not step down one level at the
        image vertex, or when the images of the M sets miss a required A
        set or crown.
        """
        part = self.partition
        self._check_level_descent()
        self._check_m_to_a()
        return {
            "intervals": self.size,
            "branches": sum(self.branch_counts()),
            "ambiguous": sorted(part.ambiguous),
            "letters": "".join(self.letters),
        }

    def _incident_named_side(self, vertex, name):
        for side in self.partition.letter_sides[name]:
            if vertex in (side.tail, side.head):
                return side
        return None

    def _check_level_descent(self):
        """Crown intervals descend one level per step while they stay in a crown.

        An interval of level k >= 3 maps under either of its branches to a
        single interval of level k - 1 at the image vertex.  At level 2 the
        image leaves the crown and may fan out, so nothing is checked there.
        """
        part = self.partition
        gens = self.letter_matrices
        for v, levels in part.vertex_levels.items():
            for i in range(self.size):
                k = levels[i]
                if k < 3:
                    continue
                for name in part.letter_options[i]:
                    side = self._incident_named_side(v, name)
                    if side is None:
                        continue
                    partner = self.domain.sides[side.partner]
                    w = partner.head if v == side.tail else partner.tail
                    start, length = self._branch_run(i, gens[name].inverse())
                    if length != 1:
                        raise CodingError(
                            "crown interval %d at vertex %d maps to %d intervals"
                            % (i, v, length)
                        )
                    if part.vertex_levels[w][start] != k - 1:
                        raise CodingError(
                            "crown interval %d: level %d at vertex %d maps to level"
                            " %d at vertex %d"
                            % (i, k, v, part.vertex_levels[w][start], w)
                        )

    def _check_m_to_a(self):
        """f(M(e)) covers every A(d) with d != e^{-1} and every crown away from s(e^{-1})."""
        part = self.partition
        inv = self.domain.name_involution()
        gens = self.letter_matrices
        for name in sorted(part.M):
            image = set()
            for i in part.M[name]:
                start, length = self._branch_run(i, gens[name].inverse())
                image.update((start + k) % self.size for k in range(length))
            for other, a_set in part.A.items():
                if other == inv[name]:
                    continue
                if not a_set <= image:
                    raise CodingError(
                        "f(M(%s)) misses A(%s): %r not in %r"
                        % (name, other, sorted(a_set - image), sorted(image))
                    )
            excluded = set()
            for side in part.letter_sides[inv[name]]:
                excluded.update((side.tail, side.head))
            for v, crown in part.crowns.items():
                if v in excluded:
                    continue
                if not crown <= image:
                    raise CodingError(
                        "f(M(%s)) misses crown at vertex %d" % (name, v)
                    )

    # ------------------------------------------------------------------

    def table(self):
        """Rows (index, left, right, letter, successors) for display."""
        part = self.partition
        rows = []
        for i in range(self.size):
            arc = part.intervals[i]
            rows.append(
                (i, str(arc.start), str(arc.end), self.letters[i], self.successors[i])
            )
        return rows

    def to_dict(self):
        part = self.partition
        return {
            "alphabet_size": len(set(self.letters)),
            "cut_points": [str(part.intervals[i].start)
                           for i in range(self.size)],
            "letters": list(self.letters),
            "successors": [list(r) for r in self.successors],
            "involution": dict(self.domain.name_involution()),
            "vertex_cycles": [
                {"letters": list(c.letters), "n": c.n}
                for c in self.domain.vertex_cycles()
            ],
            "ambiguous": sorted(part.ambiguous),
            "options": [list(o) for o in part.letter_options],
        }

    def __repr__(self):
        return "MarkovCoding(%d intervals, %d branches)" % (
            self.size,
            sum(self.branch_counts()),
        )
