"""Independent group oracle: breadth first spheres under the generators.

The oracle knows nothing about boundary partitions or Markov maps.  It
multiplies generator matrices, deduplicates group elements up to the
projective sign, and records each element at the radius where it first
appears.  Coding-side sphere data can then be judged against it: word
counts, shortness of enumerated words, and the element sets themselves.

Integer generator matrices are handled with exact arithmetic.  Float
generators use 80 bit extended precision accumulation and a two-grid
quantization: an element is considered seen when its floor grid key or
its half-shifted grid key has been stored, which is reliable while
distinct elements stay further apart than ten grid cells.  A hit whose
stored representative is farther than that aborts the build, reporting
the radius where keying became unstable, and per-radius minimum gaps
can be measured afterwards to certify the margin.
"""

import math

import numpy as np

from .exceptions import CodingError
from .partition import _letter_key

KEY_EPS = 1e-7
GAP_FACTOR = 10.0
ORACLE_BUDGET = 10 ** 7


def _canonical_exact(t):
    for x in t:
        if x != 0:
            return t if x > 0 else tuple(-y for y in t)
    return t


def _canonical_float(vec):
    i = int(np.argmax(np.abs(vec)))
    return vec if vec[i] > 0 else -vec


class OracleInstability(CodingError):
    """Raised when float keys of distinct elements collide."""

    def __init__(self, radius, gap):
        super().__init__(
            "element keys collide at radius %d (gap %.3e)" % (radius, gap))
        self.radius = radius
        self.gap = gap


class GroupOracle:
    """Breadth first spheres of the group generated by the side labels."""

    def __init__(self, domain, n_max, budget=ORACLE_BUDGET):
        gens = domain.generators()
        self.names = tuple(sorted(gens, key=_letter_key))
        self.n_max = n_max
        self.exact = all(gens[k].exact for k in self.names)
        self._joiner = "" if all(len(k) == 1 for k in self.names) else "."
        if self.exact:
            self._gens = {k: tuple(gens[k].entries()) for k in self.names}
            self._build_exact(n_max, budget)
        else:
            self._gens = {
                k: np.array(gens[k].entries(), dtype=np.longdouble)
                for k in self.names
            }
            self._build_float(n_max, budget)

    # -- exact integer arithmetic -------------------------------------

    def _build_exact(self, n_max, budget):
        ident = (1, 0, 0, 1)
        self._depth = {ident: 0}
        self.levels = [[ident]]
        self.level_words = [[""]]
        total = 1
        for radius in range(1, n_max + 1):
            fresh = []
            fresh_words = []
            for mat, word in zip(self.levels[-1], self.level_words[-1]):
                a, b, c, d = mat
                for name in self.names:
                    e, f, g, h = self._gens[name]
                    cand = _canonical_exact(
                        (a * e + b * g, a * f + b * h,
                         c * e + d * g, c * f + d * h))
                    if cand not in self._depth:
                        self._depth[cand] = radius
                        fresh.append(cand)
                        fresh_words.append(word + self._sep(word) + name)
            total += len(fresh)
            if total > budget:
                raise CodingError("oracle sphere budget %d exceeded at radius %d"
                                  % (budget, radius))
            self.levels.append(fresh)
            self.level_words.append(fresh_words)

    # -- float arithmetic with two-grid keys ---------------------------

    def _keys(self, vec):
        q = np.floor(vec / KEY_EPS)
        r = np.floor(vec / KEY_EPS + 0.5)
        return tuple(int(x) for x in q), tuple(int(x) for x in r)

    def _build_float(self, n_max, budget):
        ident = np.array([1.0, 0.0, 0.0, 1.0], dtype=np.longdouble)
        self._grid_a = {}
        self._grid_b = {}
        self.levels = [np.array([ident])]
        self.level_words = [[""]]
        ka, kb = self._keys(ident)
        self._grid_a[ka] = (0, 0)
        self._grid_b[kb] = (0, 0)
        total = 1
        for radius in range(1, n_max + 1):
            prev = self.levels[-1].reshape(-1, 2, 2)
            prev_words = self.level_words[-1]
            fresh = []
            fresh_words = []
            for name in self.names:
                g = self._gens[name].reshape(2, 2)
                prod = np.einsum("nij,jk->nik", prev, g).reshape(-1, 4)
                for row, vec in enumerate(prod):
                    vec = _canonical_float(vec)
                    ka, kb = self._keys(vec)
                    hit = self._grid_a.get(ka) or self._grid_b.get(kb)
                    if hit is not None:
                        stored = (fresh[hit[1]] if hit[0] == radius
                                  else self.levels[hit[0]][hit[1]])
                        gap = float(np.max(np.abs(stored - vec)))
                        if gap > GAP_FACTOR * KEY_EPS:
                            raise OracleInstability(radius, gap)
                        continue
                    idx = len(fresh)
                    self._grid_a[ka] = (radius, idx)
                    self._grid_b[kb] = (radius, idx)
                    fresh.append(vec)
                    fresh_words.append(
                        prev_words[row] + self._sep(prev_words[row]) + name)
            total += len(fresh)
            if total > budget:
                raise CodingError("oracle sphere budget %d exceeded at radius %d"
                                  % (budget, radius))
            self.levels.append(
                np.array(fresh) if fresh
                else np.empty((0, 4), dtype=np.longdouble))
            self.level_words.append(fresh_words)

    def _sep(self, word):
        return self._joiner if word else ""

    # -- queries --------------------------------------------------------

    def sphere_size(self, radius):
        return len(self.levels[radius])

    def sphere_words(self, radius):
        """The oracle's own shortest word for each sphere element."""
        return list(self.level_words[radius])

    def key_of_word(self, letters):
        """Canonical key of the product of the named generators."""
        if self.exact:
            mat = (1, 0, 0, 1)
            for name in letters:
                a, b, c, d = mat
                e, f, g, h = self._gens[name]
                mat = (a * e + b * g, a * f + b * h,
                       c * e + d * g, c * f + d * h)
            return _canonical_exact(mat)
        mat = np.eye(2, dtype=np.longdouble)
        for name in letters:
            mat = mat @ self._gens[name].reshape(2, 2)
        return _canonical_float(mat.reshape(4))

    def element_id(self, key):
        """Stable identity of a known element, None when outside the ball.

        Exact keys are their own identity.  Float keys resolve through
        the two grids to the stored representative, so products of the
        same element computed along different routes collapse to one
        identity even when their floor keys straddle a cell boundary.
        """
        if self.exact:
            return key if key in self._depth else None
        ka, kb = self._keys(key)
        hit = self._grid_a.get(ka) or self._grid_b.get(kb)
        if hit is None:
            return None
        stored = self.levels[hit[0]][hit[1]]
        gap = float(np.max(np.abs(stored - np.asarray(key))))
        if gap > GAP_FACTOR * KEY_EPS:
            return None
        return hit

    def depth_of_key(self, key):
        """BFS radius of an element key, None when outside the ball."""
        if self.exact:
            return self._depth.get(key)
        hit = self.element_id(key)
        return None if hit is None else hit[0]

    def depth_of_word(self, letters):
        return self.depth_of_key(self.key_of_word(letters))

    def word_keys(self, words):
        """Canonical keys for many words, sharing prefix products.

        Words are letter tuples or joined strings; passing them sorted
        maximizes prefix reuse but any order is correct.
        """
        out = []
        stack_letters = []
        stack_mats = []
        for word in words:
            letters = self._split(word)
            common = 0
            while (common < len(stack_letters) and common < len(letters)
                   and stack_letters[common] == letters[common]):
                common += 1
            del stack_letters[common:]
            del stack_mats[common:]
            for name in letters[common:]:
                prev = stack_mats[-1] if stack_mats else None
                if self.exact:
                    if prev is None:
                        prev = (1, 0, 0, 1)
                    a, b, c, d = prev
                    e, f, g, h = self._gens[name]
                    mat = (a * e + b * g, a * f + b * h,
                           c * e + d * g, c * f + d * h)
                else:
                    if prev is None:
                        prev = np.eye(2, dtype=np.longdouble)
                    mat = prev @ self._gens[name].reshape(2, 2)
                stack_letters.append(name)
                stack_mats.append(mat)
            mat = stack_mats[-1] if stack_mats else None
            if self.exact:
                out.append(_canonical_exact(mat if mat is not None
                                            else (1, 0, 0, 1)))
            else:
                flat = (mat if mat is not None
                        else np.eye(2, dtype=np.longdouble)).reshape(4)
                out.append(_canonical_float(flat.copy()))
        return out

    def _split(self, word):
        if not isinstance(word, str):
            return list(word)
        return word.split(".") if self._joiner else list(word)

    def min_gap(self, radius):
        """Smallest max-norm distance between distinct sphere elements.

        Neighbor probing on a coarse grid of GAP_FACTOR * KEY_EPS cells:
        any pair closer than one cell lands in the same or an adjacent
        cell, so math.inf means the whole radius clears the margin.
        """
        if self.exact:
            return math.inf
        level = self.levels[radius]
        cell = GAP_FACTOR * KEY_EPS
        coarse = {}
        best = math.inf
        quant = np.floor(level / cell).astype(np.int64)
        for idx in range(len(level)):
            base = tuple(int(x) for x in quant[idx])
            for off in _NEIGHBOR_OFFSETS:
                probe = (base[0] + off[0], base[1] + off[1],
                         base[2] + off[2], base[3] + off[3])
                for other in coarse.get(probe, ()):
                    gap = float(np.max(np.abs(level[other] - level[idx])))
                    best = min(best, gap)
            coarse.setdefault(base, []).append(idx)
        return best


_NEIGHBOR_OFFSETS = [
    (i, j, k, l)
    for i in (-1, 0, 1) for j in (-1, 0, 1)
    for k in (-1, 0, 1) for l in (-1, 0, 1)
]


def bfs_spheres(domain, n_max, budget=ORACLE_BUDGET):
    return GroupOracle(domain, n_max, budget)


def is_shortest(oracle, letters):
    """Whether the word realizes the group distance of its element."""
    letters = oracle._split(letters)
    depth = oracle.depth_of_word(letters)
    return depth is not None and depth == len(letters)
