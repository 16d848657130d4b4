"""Sphere enumeration and word combinatorics for a Markov coding.

A length-n admissible sequence of partition intervals projects to a word
in the generator letters (the letter emitted at each step).  Several
sequences can share a word; the number of preimage sequences is the
multiplicity of the word.  Summed over distinct words the multiplicities
give the sequence count W_n, while the number of distinct words K_n
counts group elements, one word per element when the coding is almost
injective at the word level.

Enumeration packs words into uint64 keys, 8 bits per letter with the
first letter in the most significant occupied byte, so a sorted key
array lists words lexicographically and run lengths are multiplicities.
The packing caps enumeration at length 8, which is already tens of
millions of sequences for a genus-2 surface group.
"""

import bisect
from collections import Counter

import numpy as np

from . import _kernels
from .analysis import sequence_count
from .exceptions import CodingError
from .partition import _letter_key

WORD_LIMIT = 8
DEFAULT_BUDGET = 10 ** 8


def letter_alphabet(coding):
    """Distinct letters of the coding in their canonical order."""
    return tuple(sorted(set(coding.letters), key=_letter_key))


def pi(coding, sequence):
    """Project an admissible interval sequence to its letter word.

    Raises CodingError if consecutive intervals violate the transition
    structure, so the result is always the word of a genuine orbit.
    """
    seq = list(sequence)
    succ = coding.successors
    for a, b in zip(seq, seq[1:]):
        if b not in succ[a]:
            raise CodingError(
                "sequence %r is not admissible at step %d -> %d" % (seq, a, b))
    return tuple(coding.letters[i] for i in seq)


def _csr(coding):
    succ = coding.successors
    indptr = np.zeros(len(succ) + 1, dtype=np.int64)
    flat = []
    for i, row in enumerate(succ):
        flat.extend(row)
        indptr[i + 1] = len(flat)
    return indptr, np.array(flat, dtype=np.int32)


class SphereEnumeration:
    """All words of one sphere with their sequence multiplicities.

    keys is a sorted uint64 array of distinct packed words and counts
    the matching multiplicities; sequences is the total W_n.
    """

    def __init__(self, coding, n, keys, counts, sequences):
        self.coding = coding
        self.n = n
        self.alphabet = letter_alphabet(coding)
        self.keys = keys
        self.counts = counts
        self.sequences = sequences
        self._joiner = "" if all(len(a) == 1 for a in self.alphabet) else "."

    @property
    def distinct_words(self):
        return len(self.keys)

    @property
    def collision_pairs(self):
        """Number of unordered pairs of distinct sequences sharing a word."""
        c = self.counts.astype(object)
        return int((c * (c - 1) // 2).sum())

    @property
    def multiplicity_histogram(self):
        return dict(sorted(Counter(self.counts.tolist()).items()))

    @property
    def max_multiplicity(self):
        return int(self.counts.max()) if len(self.counts) else 0

    @property
    def min_multiplicity(self):
        return int(self.counts.min()) if len(self.counts) else 0

    def decode(self, key):
        key = int(key)
        letters = []
        for r in range(self.n):
            byte = (key >> (8 * (self.n - 1 - r))) & 0xFF
            letters.append(self.alphabet[byte - 1])
        return self._joiner.join(letters)

    def encode(self, word):
        if isinstance(word, str):
            word = word.split(".") if self._joiner else list(word)
        if len(word) != self.n:
            raise CodingError("word length %d, sphere has length %d"
                              % (len(word), self.n))
        key = 0
        for name in word:
            key = (key << 8) | (self.alphabet.index(name) + 1)
        return key

    def multiplicity(self, word):
        key = self.encode(word) if not isinstance(word, int) else word
        pos = int(np.searchsorted(self.keys, np.uint64(key)))
        if pos < len(self.keys) and int(self.keys[pos]) == key:
            return int(self.counts[pos])
        return 0

    def __contains__(self, word):
        return self.multiplicity(word) > 0

    def words(self):
        for key in self.keys.tolist():
            yield self.decode(key)

    def items(self):
        for key, count in zip(self.keys.tolist(), self.counts.tolist()):
            yield self.decode(key), count

    def __repr__(self):
        return ("SphereEnumeration(n=%d, words=%d, sequences=%d)"
                % (self.n, self.distinct_words, self.sequences))


def enumerate_sphere(coding, n, budget=DEFAULT_BUDGET):
    """Enumerate the sphere of radius n and group sequences by word."""
    if n < 1:
        raise CodingError("sphere radius must be positive")
    if n > WORD_LIMIT:
        raise CodingError("packed enumeration supports radius <= %d" % WORD_LIMIT)
    total = sequence_count(coding, n)
    if total > budget:
        raise CodingError("sphere has %d sequences, over the budget %d"
                          % (total, budget))
    alphabet = letter_alphabet(coding)
    if len(alphabet) > 255:
        raise CodingError("more than 255 distinct letters")
    indptr, indices = _csr(coding)
    codes = np.array([alphabet.index(l) for l in coding.letters], dtype=np.uint8)
    packed = _kernels.enumerate_packed(indptr, indices, codes, n)
    packed.sort()
    keys, counts = np.unique(packed, return_counts=True)
    return SphereEnumeration(coding, n, keys, counts.astype(np.int64), len(packed))


def _pair_graph(coding):
    """Ordered pairs of distinct intervals with equal letters, and their moves."""
    letters = coding.letters
    succ = coding.successors
    size = len(letters)
    pairs = [(i, j) for i in range(size) for j in range(size)
             if i != j and letters[i] == letters[j]]
    index = {p: k for k, p in enumerate(pairs)}
    moves = []
    for i, j in pairs:
        out = []
        for a in succ[i]:
            for b in succ[j]:
                k = index.get((a, b))
                if k is not None:
                    out.append(k)
        moves.append(out)
    return pairs, moves


def collision_count(coding, n):
    """Exact number of unordered sequence pairs sharing a length-n word.

    Two distinct sequences with the same word agree on a prefix, diverge
    once, and stay distinct with equal letters ever after; they never
    meet again.  Summing over the divergence position therefore counts
    each pair exactly once: a prefix count into the shared state, a
    choice of two distinct same-letter successors, and a synchronized
    pair walk for the tail.  Everything is exact integer arithmetic and
    the cost grows linearly in n, so any radius is reachable.  The
    no-remeeting premise is not assumed silently: enumeration-based
    counts cross-check this function wherever spheres fit in memory.
    """
    if n < 1:
        raise CodingError("sphere radius must be positive")
    letters = coding.letters
    succ = coding.successors
    pairs, moves = _pair_graph(coding)
    index = {p: k for k, p in enumerate(pairs)}
    tails = [[1] * len(pairs)]
    for _ in range(n - 1):
        prev = tails[-1]
        tails.append([sum(prev[k] for k in out) for out in moves])
    diverge = []
    for u in range(len(letters)):
        row = succ[u]
        diverge.append([index[(a, b)] for a in row for b in row
                        if a != b and letters[a] == letters[b]])
    total = sum(tails[n - 1])
    prefix = [1] * len(letters)
    for p in range(1, n):
        for u in range(len(letters)):
            if prefix[u]:
                total += prefix[u] * sum(tails[n - 1 - p][k] for k in diverge[u])
        nxt = [0] * len(letters)
        for u in range(len(letters)):
            for v in succ[u]:
                nxt[v] += prefix[u]
        prefix = nxt
    assert total % 2 == 0
    return total // 2


def collision_words(coding, n, budget=DEFAULT_BUDGET):
    """Words with multiplicity at least 2, with their multiplicities."""
    sphere = enumerate_sphere(coding, n, budget)
    return [(word, count) for word, count in sphere.items() if count >= 2]


class WordAutomaton:
    """Deterministic automaton of the word language, by subset construction.

    States are the sets of intervals compatible with a word read so far,
    so the language accepted per length is exactly the set of distinct
    words and state sizes bound the possible multiplicities at every
    radius, not only the enumerable ones.
    """

    def __init__(self, coding):
        letters = coding.letters
        succ = coding.successors
        self.alphabet = letter_alphabet(coding)
        states = {}
        subsets = []

        def intern(s):
            if s not in states:
                states[s] = len(subsets)
                subsets.append(s)
            return states[s]

        pending = []
        self.starts = []
        for l in self.alphabet:
            s = frozenset(i for i in range(len(letters)) if letters[i] == l)
            if s:
                fresh = s not in states
                self.starts.append(intern(s))
                if fresh:
                    pending.append(s)
        rows = {}
        while pending:
            s = pending.pop()
            row = []
            for l in self.alphabet:
                t = frozenset(j for i in s for j in succ[i]
                              if letters[j] == l)
                if t:
                    fresh = t not in states
                    row.append(intern(t))
                    if fresh:
                        pending.append(t)
            rows[states[s]] = row
        self.rows = [rows[k] for k in range(len(subsets))]
        self.subset_sizes = sorted(set(len(s) for s in subsets))
        self.size = len(subsets)

    def distinct_count(self, n):
        """Exact number of distinct length-n words, any radius."""
        if n < 1:
            raise CodingError("sphere radius must be positive")
        vec = [0] * self.size
        for s in self.starts:
            vec[s] += 1
        for _ in range(n - 1):
            nxt = [0] * self.size
            for sid, v in enumerate(vec):
                if v:
                    for t in self.rows[sid]:
                        nxt[t] += v
            vec = nxt
        return sum(vec)


def word_automaton(coding):
    return WordAutomaton(coding)


def distinct_word_count(coding, n):
    """Exact K_n through the word automaton; matches enumeration."""
    return WordAutomaton(coding).distinct_count(n)


def word_statistics(coding, n_max, budget=DEFAULT_BUDGET):
    """Per-radius summary rows: sequences, distinct words, collisions."""
    rows = []
    for n in range(1, n_max + 1):
        sphere = enumerate_sphere(coding, n, budget)
        rows.append({
            "n": n,
            "sequences": sphere.sequences,
            "distinct_words": sphere.distinct_words,
            "collision_pairs": sphere.collision_pairs,
            "multiplicity_histogram": sphere.multiplicity_histogram,
        })
    return rows
