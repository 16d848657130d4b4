"""Spherical and Cesaro averages of group actions driven by the coding.

A group action assigns a transformation to every side label so that
inverse labels act by inverse maps and the letter word of every vertex
cycle acts trivially.  Averaging an observable over the sphere of
radius n means summing phi(T_w x) over all admissible coding sequences
of length n and dividing by their number W_n; the Cesaro means of the
sphere averages are the quantities that converge.

Two kinds of action are supported.  Finite actions permute a finite
point set and everything is exact rational arithmetic: the sphere sums
satisfy a transfer recurrence over the intervals, so radius 500 costs
five hundred sparse integer updates instead of a walk over 10^400
sequences.  Torus actions act on R^d/Z^d by integer matrices; a
character exp(2 pi i k.x) pulls back along a word to the character of
the transported frequency, which a depth first walk propagates in
integer arithmetic before one complex exponential per leaf.
"""

import cmath
import math
from fractions import Fraction

import numpy as np

from .exceptions import CodingError, VerificationError

TORUS_WORD_CAP = 12
TORUS_BUDGET = 2 * 10 ** 6
FREQ_BITS = 63
BRUTE_BUDGET = 10 ** 6


class GroupAction:
    """Transformation per side label: permutations or torus matrices."""

    def __init__(self, kind, tables):
        self.kind = kind
        self.tables = dict(tables)
        if kind == "finite":
            sizes = {len(p) for p in self.tables.values()}
            if len(sizes) != 1:
                raise CodingError("permutations act on differing point counts")
            self.size = sizes.pop()
            for name, perm in self.tables.items():
                if sorted(perm) != list(range(self.size)):
                    raise CodingError("table for %r is not a permutation"
                                      % name)
                self.tables[name] = tuple(perm)
        elif kind == "torus":
            dims = {len(m) for m in self.tables.values()}
            if len(dims) != 1:
                raise CodingError("matrices act on differing dimensions")
            self.dim = dims.pop()
            for name, mat in self.tables.items():
                rows = tuple(tuple(int(x) for x in row) for row in mat)
                if any(len(r) != self.dim for r in rows):
                    raise CodingError("matrix for %r is not square" % name)
                self.tables[name] = rows
        else:
            raise CodingError("unknown action kind %r" % kind)

    def apply(self, name, point):
        """Image of a point under the label's transformation."""
        table = self.tables[name]
        if self.kind == "finite":
            return table[point]
        return tuple(
            sum(row[j] * point[j] for j in range(self.dim)) % 1
            for row in table)

    def __repr__(self):
        target = ("%d points" % self.size if self.kind == "finite"
                  else "torus R^%d/Z^%d" % (self.dim, self.dim))
        return "GroupAction(%s on %s)" % (self.kind, target)


def finite_action(tables):
    return GroupAction("finite", tables)


def torus_action(tables):
    return GroupAction("torus", tables)


def trivial_action(domain, size=1):
    """Every label acts by the identity on `size` points."""
    ident = tuple(range(size))
    return GroupAction("finite", {name: ident
                                  for name in domain.generators()})


def _word_perm(tables, letters, size):
    """Permutation of the word: x -> T_{l_1}(T_{l_2}(... T_{l_n} x))."""
    perm = tuple(range(size))
    for name in reversed(letters):
        table = tables[name]
        perm = tuple(table[x] for x in perm)
    return perm


def _mat_mul(a, b):
    d = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d))
        for i in range(d))


def _mat_identity(d):
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def validate_action(domain, action):
    """Check the homomorphism conditions explicitly.

    Every side label must have a table, inverse labels must act by
    inverse transformations, and the letter word of every vertex cycle
    must act by the identity.  Nothing is repaired or inferred; a table
    that fails any condition raises VerificationError.
    """
    names = sorted(domain.generators())
    missing = [n for n in names if n not in action.tables]
    if missing:
        raise VerificationError("labels %s have no table" % missing)
    involution = domain.name_involution()
    if action.kind == "finite":
        size = action.size
        ident = tuple(range(size))
        for name in names:
            perm = action.tables[name]
            other = action.tables[involution[name]]
            if any(other[perm[x]] != x for x in range(size)):
                raise VerificationError(
                    "tables for %r and %r are not inverse" %
                    (name, involution[name]))
        for cycle in domain.vertex_cycles():
            if _word_perm(action.tables, cycle.letters, size) != ident:
                raise VerificationError(
                    "vertex word %s does not act trivially" %
                    "".join(cycle.letters))
    else:
        d = action.dim
        ident = _mat_identity(d)
        for name in names:
            prod = _mat_mul(action.tables[name],
                            action.tables[involution[name]])
            if prod != ident:
                raise VerificationError(
                    "matrices for %r and %r are not inverse" %
                    (name, involution[name]))
        for cycle in domain.vertex_cycles():
            prod = ident
            for name in cycle.letters:
                prod = _mat_mul(prod, action.tables[name])
            if prod != ident:
                raise VerificationError(
                    "vertex word %s does not act trivially" %
                    "".join(cycle.letters))


def _phi_numerators(phi):
    """Common denominator form of a rational observable."""
    values = [Fraction(v) for v in phi]
    denom = 1
    for v in values:
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    return [int(v * denom) for v in values], denom


def _pred_rows(succ):
    rows = [[] for _ in succ]
    for i, row in enumerate(succ):
        for j in row:
            rows[j].append(i)
    return rows


def spherical_average(coding, action, phi, point, n_max):
    """Sphere averages s_0 .. s_n_max of phi at a base point.

    Finite actions return exact Fractions via the transfer recurrence:
    with A_k[j](x) the sum of phi(T_w x) over admissible words of
    length k ending in interval j,

        A_k[j](x) = sum over predecessors i of A_{k-1}[i](T_{e_j} x),

    carried as integer vectors over the whole point set.  Torus actions
    return complex values from the character transport walk and are
    capped at word length TORUS_WORD_CAP.
    """
    if action.kind == "finite":
        return _spherical_finite(coding, action, phi, point, n_max)
    return _spherical_torus(coding, action, phi, point, n_max)


def _spherical_finite(coding, action, phi, point, n_max):
    size = action.size
    if len(phi) != size:
        raise CodingError("observable has %d values for %d points"
                          % (len(phi), size))
    if not 0 <= point < size:
        raise CodingError("base point %r outside the %d point set"
                          % (point, size))
    nums, denom = _phi_numerators(phi)
    states = len(coding.letters)
    preds = _pred_rows(coding.successors)
    tables = [action.tables[name] for name in coding.letters]
    level = [[nums[tables[j][x]] for x in range(size)]
             for j in range(states)]
    counts = [1] * states
    out = [Fraction(nums[point], denom)]
    for n in range(1, n_max + 1):
        total = sum(vec[point] for vec in level)
        weight = sum(counts)
        out.append(Fraction(total, denom * weight))
        if n == n_max:
            break
        nxt = []
        for j in range(states):
            acc = [0] * size
            for i in preds[j]:
                vec = level[i]
                for x in range(size):
                    acc[x] += vec[x]
            table = tables[j]
            nxt.append([acc[table[x]] for x in range(size)])
        level = nxt
        counts = [sum(counts[i] for i in preds[j]) for j in range(states)]
    return out


def _spherical_torus(coding, action, phi, point, n_max):
    if n_max > TORUS_WORD_CAP:
        raise CodingError("torus averages are capped at word length %d"
                          % TORUS_WORD_CAP)
    d = action.dim
    if len(point) != d:
        raise CodingError("base point has dimension %d, action wants %d"
                          % (len(point), d))
    point = tuple(Fraction(x) for x in point)
    freqs = {tuple(int(c) for c in k): complex(v) for k, v in phi.items()}
    if any(len(k) != d for k in freqs):
        raise CodingError("frequency vectors must have dimension %d" % d)
    states = len(coding.letters)
    trans = [tuple(zip(*action.tables[name])) for name in coding.letters]
    succ = coding.successors
    preds = _pred_rows(succ)
    out = [sum(v * _character(k, point) for k, v in freqs.items())]
    bound = 1 << FREQ_BITS
    counts = [1] * states
    for n in range(1, n_max + 1):
        if n > 1:
            counts = [sum(counts[i] for i in preds[j])
                      for j in range(states)]
        weight = sum(counts)
        if weight > TORUS_BUDGET:
            raise CodingError("torus walk of %d sequences at radius %d is "
                              "over the budget %d"
                              % (weight, n, TORUS_BUDGET))
        total = 0.0 + 0.0j
        for k0, coeff in freqs.items():
            stack = [(j, 1, _vec_apply(trans[j], k0))
                     for j in range(states)]
            while stack:
                j, depth, k = stack.pop()
                if any(abs(c) >= bound for c in k):
                    raise CodingError(
                        "frequency left the 63 bit range at radius %d" % n)
                if depth == n:
                    total += coeff * _character(k, point)
                    continue
                for nx in succ[j]:
                    stack.append((nx, depth + 1, _vec_apply(trans[nx], k)))
        out.append(total / weight)
    return out


def _vec_apply(transposed, k):
    """Transported frequency along one more letter: k -> A^T k."""
    return tuple(sum(col[j] * k[j] for j in range(len(k)))
                 for col in transposed)


def _character(k, point):
    phase = sum(Fraction(c) * x for c, x in zip(k, point)) % 1
    return cmath.exp(2j * cmath.pi * float(phase))


def brute_sphere_average(coding, action, phi, point, n, budget=BRUTE_BUDGET):
    """Direct walk over every admissible sequence, for cross checks."""
    if action.kind != "finite":
        raise CodingError("brute averaging is for finite actions")
    values = [Fraction(v) for v in phi]
    if n == 0:
        return values[point]
    succ = coding.successors
    tables = [action.tables[name] for name in coding.letters]
    total = Fraction(0)
    weight = 0
    stack = [(j, 1, (j,)) for j in range(len(coding.letters))]
    while stack:
        j, depth, seq = stack.pop()
        if depth == n:
            x = point
            for idx in reversed(seq):
                x = tables[idx][x]
            total += values[x]
            weight += 1
            if weight > budget:
                raise CodingError("brute walk exceeded budget %d" % budget)
            continue
        for nx in succ[j]:
            stack.append((nx, depth + 1, seq + (nx,)))
    return total / weight


def cesaro_averages(values):
    """Running means c_N = (s_0 + ... + s_{N-1}) / N for N = 1..len."""
    out = []
    acc = None
    for i, v in enumerate(values):
        acc = v if acc is None else acc + v
        out.append(acc / (i + 1))
    return out


def conditional_expectation_finite(action, phi, point):
    """Mean of phi over the orbit of the point.

    The orbit of the generated permutation group is the smallest
    invariant set containing the point, so this is the conditional
    expectation against the invariant sigma algebra, evaluated there.
    """
    if action.kind != "finite":
        raise CodingError("orbit means are for finite actions")
    values = [Fraction(v) for v in phi]
    seen = {point}
    frontier = [point]
    while frontier:
        x = frontier.pop()
        for table in action.tables.values():
            y = table[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return sum(values[x] for x in seen) / len(seen)


def word_sphere_average(coding, action, phi, point, n, budget=None):
    """Distinct-word and sequence averages at radius n, both exact.

    The sequence average weights each distinct word by its sequence
    multiplicity; the word average counts every word once.  Both come
    from one sphere enumeration and a vectorized transport of the base
    point; they differ exactly when multiplicities are uneven across
    the sphere.
    """
    from .words import enumerate_sphere

    if action.kind != "finite":
        raise CodingError("word averaging is for finite actions")
    sphere = (enumerate_sphere(coding, n) if budget is None
              else enumerate_sphere(coding, n, budget))
    values = [Fraction(v) for v in phi]
    size = action.size
    table = np.zeros((len(sphere.alphabet) + 1, size), dtype=np.int64)
    for code, name in enumerate(sphere.alphabet):
        table[code + 1] = action.tables[name]
    points = np.full(len(sphere.keys), point, dtype=np.int64)
    for pos in range(n - 1, -1, -1):
        shift = np.uint64(8 * (n - 1 - pos))
        codes = (sphere.keys >> shift).astype(np.int64) & 0xFF
        points = table[codes, points]
    hits = np.bincount(points, minlength=size)
    weighted = np.bincount(points, weights=sphere.counts.astype(np.float64),
                           minlength=size).astype(np.int64)
    word_avg = sum(values[x] * int(hits[x]) for x in range(size)) \
        / len(sphere.keys)
    seq_avg = sum(values[x] * int(weighted[x]) for x in range(size)) \
        / sphere.sequences
    return word_avg, seq_avg
