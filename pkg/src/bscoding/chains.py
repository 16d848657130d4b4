"""Cycles, consecutive cycles, and special chains in generator words.

A word traces a fan of copies of the fundamental domain around an
interior vertex; such words are cycles.  Around a vertex v the full loop
has 2 n(v) letters and reads off the vertex cycle word in one rotational
direction or its reversed inverse in the other.  A single letter is a
cycle exactly when its side has an endpoint inside the plane, so for a
compact domain every letter is one, while an ideal polygon has no cycles
at all.

Chains of consecutive cycles with controlled block lengths (first block
at most n(v) - 1 letters, middle blocks exactly n(v) - 1, final block at
most n(v)) are the special chains; the fans of a chain all lean on one
geodesic and share a rotational orientation, so chain queries keep the
two orientation classes of vertex words separate and only join blocks
within a class.  Orientation rigidity is what keeps the number of
special chains of a given length bounded while generic words multiply
exponentially.  Blocks are required nonempty, and a one-block chain is
bounded by n(v) so that a half loop around a vertex, the classic
two-spelling configuration, counts as a special chain.

Everything here works from the vertex cycle words and the letter
involution alone, so imported combinatorial codings are supported on
the same footing as geometric ones.
"""

from .exceptions import CodingError

_ORIENTS = (0, 1)


class ChainTables:
    """Oriented cyclic word tables answering cycle and chain queries."""

    def __init__(self, cycles, involution):
        """cycles: iterable of (letters, n) pairs, letters of length 2 n.

        Each pair is read in the orientation it was recorded in and in
        the reversed inverse orientation; the two families are kept
        apart.  A palindromic-up-to-inversion loop lands in both.
        """
        self.involution = dict(involution)
        self.entries = {0: [], 1: []}
        seen = {0: set(), 1: set()}
        for letters, n in cycles:
            letters = tuple(letters)
            if len(letters) != 2 * n:
                raise CodingError("vertex word length %d with n=%d"
                                  % (len(letters), n))
            reverse = tuple(self.involution[x] for x in reversed(letters))
            for orient, word in ((0, letters), (1, reverse)):
                canon = min(word[k:] + word[:k] for k in range(len(word)))
                if canon not in seen[orient]:
                    seen[orient].add(canon)
                    self.entries[orient].append((word, n))
        ns = [n for orient in _ORIENTS for _, n in self.entries[orient]]
        self.max_n = max(ns, default=0)

    @classmethod
    def from_domain(cls, domain):
        cycles = [(vc.letters, vc.n) for vc in domain.vertex_cycles()]
        return cls(cycles, domain.name_involution())

    def cycle_ns(self, word, orient=None):
        """n(v) values of vertices the word is a cycle around."""
        word = tuple(word)
        out = set()
        if not word or len(word) > 2 * self.max_n:
            return out
        orients = _ORIENTS if orient is None else (orient,)
        for o in orients:
            for letters, n in self.entries[o]:
                if len(word) > 2 * n:
                    continue
                doubled = letters + letters
                for k in range(2 * n):
                    if doubled[k:k + len(word)] == word:
                        out.add(n)
                        break
        return out

    def is_cycle(self, word, orient=None):
        return bool(self.cycle_ns(word, orient))

    def consecutive(self, first, second, orient=None):
        """Whether two cycles chain: some e makes first+e and e~+second cycles."""
        first = tuple(first)
        second = tuple(second)
        orients = _ORIENTS if orient is None else (orient,)
        for o in orients:
            for e, einv in self.involution.items():
                if (self.is_cycle(first + (e,), o)
                        and self.is_cycle((einv,) + second, o)):
                    return True
        return False

    def _block_ok(self, block, role, orient):
        ns = self.cycle_ns(block, orient)
        if role == "middle":
            return any(len(block) == n - 1 for n in ns)
        if role == "first":
            return any(len(block) <= n - 1 for n in ns)
        return any(len(block) <= n for n in ns)

    def is_special_chain(self, word):
        """Whether the whole word splits into consecutive cycle blocks."""
        word = tuple(word)
        if not word:
            return False
        return any(self._search(word, 0, None, o) for o in _ORIENTS)

    def _search(self, word, pos, prev, orient):
        total = len(word)
        for end in range(pos + 1, total + 1):
            block = word[pos:end]
            if not self.cycle_ns(block, orient):
                break
            if prev is not None and not self.consecutive(prev, block, orient):
                continue
            if end == total:
                role = "single" if pos == 0 else "last"
                if self._block_ok(block, role, orient):
                    return True
            else:
                role = "first" if pos == 0 else "middle"
                if (self._block_ok(block, role, orient)
                        and self._search(word, end, block, orient)):
                    return True
        return False

    def max_special_suffix(self, word):
        """Length of the longest suffix forming a special chain, 0 if none."""
        word = tuple(word)
        for start in range(len(word)):
            if self.is_special_chain(word[start:]):
                return len(word) - start
        return 0

    def max_cycle_suffix(self, word, orient=None):
        """Length of the longest suffix that is a single cycle."""
        word = tuple(word)
        for start in range(len(word)):
            if self.is_cycle(word[start:], orient):
                return len(word) - start
        return 0

    def _blocks_by_len(self, orient):
        table = {}
        for size in range(1, 2 * self.max_n + 1):
            pool = set()
            for letters, n in self.entries[orient]:
                if size > 2 * n:
                    continue
                doubled = letters + letters
                for k in range(2 * n):
                    pool.add(doubled[k:k + size])
            table[size] = sorted(pool)
        return table

    def special_chains(self, length):
        """All special chains of exactly this length, as letter tuples."""
        if length < 1:
            return []
        found = set()
        for orient in _ORIENTS:
            blocks = self._blocks_by_len(orient)

            def grow(prefix, prev, remaining, first, orient=orient, blocks=blocks):
                if remaining == 0:
                    found.add(prefix)
                    return
                for size in range(1, min(remaining, 2 * self.max_n) + 1):
                    closing = size == remaining
                    for block in blocks.get(size, ()):
                        ns = self.cycle_ns(block, orient)
                        if not ns:
                            continue
                        if closing:
                            if not any(size <= n for n in ns):
                                continue
                        elif first:
                            if not any(size <= n - 1 for n in ns):
                                continue
                        else:
                            if not any(size == n - 1 for n in ns):
                                continue
                        if prev is not None and not self.consecutive(
                                prev, block, orient):
                            continue
                        grow(prefix + block, block, remaining - size, False)

            grow((), None, length, True)
        return sorted(found)


def ends_in_special_chain(word, tables):
    """Whether some suffix of the word is a special chain.

    With every letter a cycle, as happens for compact domains, any word
    ends in a one-letter chain and the predicate is vacuous; its power
    comes from domains with ideal vertices and from the finer statistics
    max_special_suffix and special_chains.
    """
    if isinstance(tables, ChainTables):
        t = tables
    else:
        t = ChainTables.from_domain(tables)
    return t.max_special_suffix(word) > 0


def detect_cycles(word, tables):
    """Maximal cycle substrings of the word as (start, length) pairs."""
    if not isinstance(tables, ChainTables):
        tables = ChainTables.from_domain(tables)
    word = tuple(word)
    out = []
    n = len(word)
    start = 0
    while start < n:
        best = 0
        for end in range(start + 1, n + 1):
            if tables.is_cycle(word[start:end]):
                best = end - start
            else:
                break
        if best == 0:
            start += 1
            continue
        if not out or start + best > out[-1][0] + out[-1][1]:
            out.append((start, best))
        start += 1
    return out
