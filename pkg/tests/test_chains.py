import pytest

from bscoding.chains import ChainTables, detect_cycles, ends_in_special_chain
from bscoding.domain import ideal_triangle_domain, sl2z_domain, surface_domain
from bscoding.exceptions import CodingError
from bscoding.markov import MarkovCoding
from bscoding.words import enumerate_sphere

# counts of special chains by exact length, frozen from the generative
# search; boundedness is the content of the finite-fiber theorem
SL2Z_CHAINS = [3, 7, 8, 6, 2, 0, 0, 0, 0, 0, 0, 0]
OCT_CHAINS = [8, 32, 48, 64, 64, 64, 64, 64, 64, 64, 64, 64]


def sl2z_tables():
    return ChainTables.from_domain(sl2z_domain())


def octagon_tables():
    return ChainTables.from_domain(surface_domain(2))


def test_sl2z_cycle_entries():
    tables = sl2z_tables()
    # one orientation reads TsTsTs around the order-3 vertex, the other
    # ststst; the parabolic-free relation ss appears in both
    words0 = {w for w, _ in tables.entries[0]}
    words1 = {w for w, _ in tables.entries[1]}
    assert ("s", "s") in words0 and ("s", "s") in words1
    assert any("".join(w) == "TsTsTs" for w in words0)
    assert any("".join(w) == "ststst" for w in words1)


def test_octagon_cycle_entries_are_rotations():
    # the eight vertex cycles are rotations of one loop, so each
    # orientation keeps a single cyclic class; every rotation is still
    # recognized as a full cycle
    tables = octagon_tables()
    words0 = {"".join(w) for w, _ in tables.entries[0]}
    assert words0 == {"dCbADcBa"}
    doubled = "dCbADcBa" * 2
    for k in range(8):
        rot = tuple(doubled[k:k + 8])
        assert 4 in tables.cycle_ns(rot, orient=0)


def test_triangle_has_no_cycles():
    tables = ChainTables.from_domain(ideal_triangle_domain())
    assert tables.entries[0] == [] and tables.entries[1] == []
    assert tables.special_chains(1) == []
    assert not tables.is_special_chain(("a",))


def test_single_letters_are_cycles_on_compact_domains():
    tables = octagon_tables()
    for name in "abcdABCD":
        assert tables.is_cycle((name,))
        assert tables.is_special_chain((name,))


def test_cycle_ns():
    tables = sl2z_tables()
    assert tables.cycle_ns(("s", "s")) == {1}
    assert 3 in tables.cycle_ns(("T", "s"))
    assert tables.cycle_ns(("t", "T")) == set()


def test_consecutive_requires_matching_orientation():
    tables = sl2z_tables()
    # Ts continues TsTsTs in orientation 0; st lives in orientation 1,
    # so the pair cannot be consecutive in any single orientation
    assert tables.is_cycle(("T", "s"), orient=0)
    assert tables.is_cycle(("s", "t"), orient=1)
    assert not tables.consecutive(("T", "s"), ("s", "t"), orient=0)


def test_special_chain_counts_sl2z():
    tables = sl2z_tables()
    for length, want in enumerate(SL2Z_CHAINS, start=1):
        assert len(tables.special_chains(length)) == want


def test_special_chain_counts_octagon_saturate():
    tables = octagon_tables()
    for length, want in enumerate(OCT_CHAINS, start=1):
        assert len(tables.special_chains(length)) == want


def test_special_chains_are_special():
    tables = octagon_tables()
    for chain in tables.special_chains(5):
        assert tables.is_special_chain(chain)
        assert tables.max_special_suffix(chain) == 5


def test_max_special_suffix_monotone_on_extension():
    tables = octagon_tables()
    word = ("d", "C", "b", "A")
    suffix = tables.max_special_suffix(word)
    assert suffix >= 3
    longer = ("b",) + word
    assert tables.max_special_suffix(longer) >= suffix


def test_min_multiplicity_words_carry_long_chain_suffixes():
    # calibration at radius 4: every multiplicity-3 word ends in a
    # special chain of length at least 3 (the converse fails)
    coding = MarkovCoding(surface_domain(2))
    tables = octagon_tables()
    sphere = enumerate_sphere(coding, 4)
    suffixes = {}
    for word, mult in sphere.items():
        if mult == 3:
            s = tables.max_special_suffix(tuple(word))
            suffixes[s] = suffixes.get(s, 0) + 1
    assert suffixes == {3: 20, 4: 12}


def test_ends_in_special_chain_wrapper():
    dom = surface_domain(2)
    tables = ChainTables.from_domain(dom)
    assert ends_in_special_chain(("b", "a"), tables)
    assert ends_in_special_chain(("b", "a"), dom)  # accepts the domain too
    tri = ideal_triangle_domain()
    assert not ends_in_special_chain(("a", "b"), tri)


def test_detect_cycles_finds_maximal_runs():
    tables = octagon_tables()
    word = ("d", "C", "b", "A", "D")
    found = detect_cycles(word, tables)
    assert any(start == 0 and length == 5 for start, length in found)


def test_bad_cycle_length_rejected():
    with pytest.raises(CodingError):
        ChainTables([(("a", "b", "a"), 2)], {"a": "a", "b": "b"})


def test_half_loop_is_a_chain():
    # a single block may fill the whole vertex word: length n(v) blocks
    # close a chain of one block
    tables = sl2z_tables()
    assert tables.is_special_chain(("s", "s"))
    assert tables.is_special_chain(("T", "s", "T"))
