import pytest

from bscoding.domain import ideal_triangle_domain, sl2z_domain, surface_domain
from bscoding.exceptions import CodingError
from bscoding.markov import MarkovCoding
from bscoding.words import (
    SphereEnumeration,
    collision_count,
    collision_words,
    distinct_word_count,
    enumerate_sphere,
    letter_alphabet,
    pi,
    word_automaton,
    word_statistics,
)

# frozen sphere data, independently derived from the subset automaton,
# the divergence recurrence, and full enumeration
SL2Z_W = [8, 12, 20, 32, 52, 84, 136, 220]
SL2Z_K = [3, 6, 10, 16, 26, 42, 68, 110, 178, 288, 466, 754]
SL2Z_C = [8, 6, 10, 16, 26, 42, 68, 110]

OCT_W = [48, 320, 2224, 15528, 108384, 756496]
OCT_K = [8, 56, 392, 2736, 19096, 133288, 930328, 6493536,
         45323816, 316352792, 2208090536, 15412109328]
OCT_C = [122, 774, 5354, 37402, 261058, 1822110, 12718066, 88770002,
         619600010, 4324706358, 30185740154, 210691509130]


def sl2z_coding():
    return MarkovCoding(sl2z_domain())


def octagon_coding():
    return MarkovCoding(surface_domain(2))


def triangle_coding():
    return MarkovCoding(ideal_triangle_domain())


def test_sl2z_sphere_goldens():
    coding = sl2z_coding()
    for n in range(1, 9):
        sphere = enumerate_sphere(coding, n)
        assert sphere.sequences == SL2Z_W[n - 1]
        assert len(sphere.keys) == SL2Z_K[n - 1]
        assert sphere.collision_pairs == SL2Z_C[n - 1]


def test_sl2z_multiplicities_all_two_past_radius_one():
    coding = sl2z_coding()
    assert enumerate_sphere(coding, 1).multiplicity_histogram == {2: 2, 4: 1}
    for n in (2, 3, 5, 8):
        sphere = enumerate_sphere(coding, n)
        assert sphere.multiplicity_histogram == {2: SL2Z_K[n - 1]}


def test_sl2z_radius_two_words():
    sphere = enumerate_sphere(sl2z_coding(), 2)
    assert sorted(sphere.words()) == ["TT", "Ts", "sT", "st", "ts", "tt"]
    assert all(sphere.multiplicity(w) == 2 for w in sphere.words())


def test_octagon_sphere_goldens():
    coding = octagon_coding()
    for n in range(1, 7):
        sphere = enumerate_sphere(coding, n)
        assert sphere.sequences == OCT_W[n - 1]
        assert len(sphere.keys) == OCT_K[n - 1]
        assert sphere.collision_pairs == OCT_C[n - 1]


def test_octagon_multiplicity_histograms():
    coding = octagon_coding()
    sphere1 = enumerate_sphere(coding, 1)
    assert sphere1.multiplicity_histogram == {5: 2, 6: 4, 7: 2}
    sphere4 = enumerate_sphere(coding, 4)
    assert sphere4.multiplicity_histogram == {
        3: 32, 4: 216, 5: 850, 6: 1148, 7: 490
    }
    assert sphere4.min_multiplicity == 3
    assert sphere4.max_multiplicity == 7


def test_octagon_automaton_multiplicity_range_is_three_to_seven():
    # the subset automaton is a proof: at every radius each distinct word
    # is realized by between 3 and 7 sequences, never fewer
    automaton = word_automaton(octagon_coding())
    assert automaton.size == 36
    assert automaton.subset_sizes == [3, 4, 5, 6, 7]


def test_sl2z_automaton():
    automaton = word_automaton(sl2z_coding())
    assert automaton.size == 5
    assert automaton.subset_sizes == [2, 4]
    for n in range(1, 13):
        assert automaton.distinct_count(n) == SL2Z_K[n - 1]


def test_octagon_automaton_extends_past_enumeration():
    automaton = word_automaton(octagon_coding())
    for n in range(1, 13):
        assert automaton.distinct_count(n) == OCT_K[n - 1]


def test_collision_recurrence_extends_past_enumeration():
    coding = octagon_coding()
    for n in range(1, 13):
        assert collision_count(coding, n) == OCT_C[n - 1]


def test_triangle_words_are_injective():
    coding = triangle_coding()
    sphere = enumerate_sphere(coding, 5)
    assert sphere.sequences == 48
    assert len(sphere.keys) == 48
    assert sphere.collision_pairs == 0
    assert collision_count(coding, 5) == 0
    assert sphere.multiplicity_histogram == {1: 48}


def test_distinct_word_count_matches_enumeration():
    for coding in (sl2z_coding(), octagon_coding(), triangle_coding()):
        for n in (1, 2, 3, 4):
            sphere = enumerate_sphere(coding, n)
            assert distinct_word_count(coding, n) == len(sphere.keys)


def test_collision_words_are_the_multiplicity_two_or_more_words():
    coding = sl2z_coding()
    sphere = enumerate_sphere(coding, 3)
    heavy = collision_words(coding, 3)
    assert sorted(w for w, _ in heavy) == sorted(sphere.words())
    assert all(m == 2 for _, m in heavy)  # every word has mult 2


def test_encode_decode_roundtrip():
    coding = octagon_coding()
    sphere = enumerate_sphere(coding, 4)
    for key in sphere.keys[:50:7]:
        word = sphere.decode(int(key))
        assert sphere.encode(word) == int(key)
        assert word in sphere


def test_pi_maps_sequences_to_letters():
    coding = sl2z_coding()
    seq = (0, coding.successors[0][0])
    word = pi(coding, seq)
    assert word == (coding.letters[seq[0]], coding.letters[seq[1]])


def test_pi_rejects_inadmissible_steps():
    coding = sl2z_coding()
    bad = None
    for j in range(coding.size):
        if j not in coding.successors[0]:
            bad = (0, j)
            break
    with pytest.raises(CodingError):
        pi(coding, bad)


def test_enumeration_budget_and_length_limits():
    coding = octagon_coding()
    with pytest.raises(CodingError):
        enumerate_sphere(coding, 9)
    with pytest.raises(CodingError):
        enumerate_sphere(coding, 0)
    with pytest.raises(CodingError):
        enumerate_sphere(coding, 6, budget=1000)


def test_word_statistics_rows():
    rows = word_statistics(sl2z_coding(), 4)
    assert [r["n"] for r in rows] == [1, 2, 3, 4]
    assert [r["sequences"] for r in rows] == SL2Z_W[:4]
    assert [r["distinct_words"] for r in rows] == SL2Z_K[:4]
    assert [r["collision_pairs"] for r in rows] == SL2Z_C[:4]


def test_alphabet_order_is_stable():
    coding = octagon_coding()
    assert letter_alphabet(coding) == tuple(
        sorted(set(coding.letters), key=lambda s: (s.lower(), s.isupper()))
    )


def test_multiplicity_consistency_identity():
    # sum of multiplicities is W_n and sum of m(m-1)/2 is the pair count
    sphere = enumerate_sphere(octagon_coding(), 3)
    mults = [sphere.multiplicity(w) for w in sphere.words()]
    assert sum(mults) == sphere.sequences
    assert sum(m * (m - 1) // 2 for m in mults) == sphere.collision_pairs


def test_sphere_repr_and_items():
    sphere = enumerate_sphere(sl2z_coding(), 2)
    assert "n=2" in repr(sphere)
    items = dict(sphere.items())
    assert set(items.values()) == {2}
    assert len(items) == 6
