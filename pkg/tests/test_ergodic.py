"""Spherical averages: transfer recurrence against brute enumeration."""

import random
from fractions import Fraction

import pytest

import bscoding.ergodic as ergodic
from bscoding import (
    MarkovCoding,
    brute_sphere_average,
    cesaro_averages,
    conditional_expectation_finite,
    finite_action,
    get_preset,
    spherical_average,
    torus_action,
    trivial_action,
    validate_action,
    word_sphere_average,
)
from bscoding.exceptions import CodingError, VerificationError

OCTAGON_LETTERS = "abcd"

# valid two point action of the octagon group: the a side swaps, the
# relator contains a and its inverse exactly once each
OCT_SWAP = {name: ((1, 0) if name in "aA" else (0, 1))
            for name in "aAbBcCdD"}

# involution on the torus plus an order two matrix whose product with it
# has order three, so all modular vertex words act trivially
SL2Z_TORUS = {
    "s": ((0, 1), (1, 0)),
    "t": ((-1, 0), (-1, 1)),
    "T": ((-1, 0), (-1, 1)),
}


def octagon_setup():
    domain = get_preset("octagon")
    return domain, MarkovCoding(domain)


def test_group_action_validation():
    act = finite_action({"s": (1, 0), "t": (0, 1), "T": (0, 1)})
    assert act.size == 2
    assert act.apply("s", 0) == 1
    with pytest.raises(CodingError, match="not a permutation"):
        finite_action({"s": (0, 0)})
    with pytest.raises(CodingError, match="differing point counts"):
        finite_action({"s": (1, 0), "t": (0, 1, 2)})
    with pytest.raises(CodingError, match="not square"):
        torus_action({"s": ((1, 0),)})
    with pytest.raises(CodingError, match="unknown action kind"):
        ergodic.GroupAction("affine", {})


def test_validate_octagon_swap():
    domain, _ = octagon_setup()
    validate_action(domain, finite_action(OCT_SWAP))


def test_validate_rejects_sl2z_two_point_swap():
    # s alone cannot swap two points: the order three vertex words force
    # any action where t is trivial to make s trivial too
    domain = get_preset("sl2z")
    tables = {"s": (1, 0), "t": (0, 1), "T": (0, 1)}
    with pytest.raises(VerificationError, match="does not act trivially"):
        validate_action(domain, finite_action(tables))


def test_validate_missing_label():
    domain = get_preset("sl2z")
    with pytest.raises(VerificationError, match="have no table"):
        validate_action(domain, finite_action({"s": (0, 1), "t": (0, 1)}))


def test_validate_non_inverse_pair():
    domain = get_preset("sl2z")
    tables = {"s": (0, 1), "t": (1, 0), "T": (0, 1)}
    with pytest.raises(VerificationError, match="not inverse"):
        validate_action(domain, finite_action(tables))


def test_validate_torus_action():
    domain = get_preset("sl2z")
    validate_action(domain, torus_action(SL2Z_TORUS))
    bad = dict(SL2Z_TORUS)
    bad["t"] = bad["T"] = ((1, 0), (0, 1))
    with pytest.raises(VerificationError, match="does not act trivially"):
        validate_action(domain, torus_action(bad))


def test_trivial_action_is_valid_everywhere():
    for preset in ("sl2z", "octagon", "triangle"):
        domain = get_preset(preset)
        act = trivial_action(domain, size=3)
        validate_action(domain, act)
        assert all(t == (0, 1, 2) for t in act.tables.values())


def test_finite_recurrence_matches_brute_octagon():
    domain, coding = octagon_setup()
    act = finite_action(OCT_SWAP)
    phi = (1, 0)
    series = spherical_average(coding, act, phi, 0, 4)
    for n in range(5):
        assert series[n] == brute_sphere_average(coding, act, phi, 0, n)


def test_finite_recurrence_matches_brute_sl2z():
    coding = MarkovCoding(get_preset("sl2z"))
    act = finite_action({"s": (1, 0), "t": (1, 0), "T": (1, 0)})
    validate_action(get_preset("sl2z"), act)
    phi = (Fraction(2, 3), Fraction(-1, 5))
    series = spherical_average(coding, act, phi, 1, 6)
    for n in range(7):
        assert series[n] == brute_sphere_average(coding, act, phi, 1, n)


def test_constant_observable_averages_to_one():
    domain, coding = octagon_setup()
    act = finite_action(OCT_SWAP)
    series = spherical_average(coding, act, (1, 1), 0, 60)
    assert all(v == 1 for v in series)
    assert all(c == 1 for c in cesaro_averages(series))


def test_finite_input_validation():
    domain, coding = octagon_setup()
    act = finite_action(OCT_SWAP)
    with pytest.raises(CodingError, match="observable has"):
        spherical_average(coding, act, (1, 0, 0), 0, 2)
    with pytest.raises(CodingError, match="outside"):
        spherical_average(coding, act, (1, 0), 5, 2)


def test_conditional_expectation_orbits():
    domain, _ = octagon_setup()
    tables = {name: ((1, 0, 2) if name in "aA" else (0, 1, 2))
              for name in "aAbBcCdD"}
    act = finite_action(tables)
    validate_action(domain, act)
    phi = (1, 0, 5)
    assert conditional_expectation_finite(act, phi, 0) == Fraction(1, 2)
    assert conditional_expectation_finite(act, phi, 1) == Fraction(1, 2)
    assert conditional_expectation_finite(act, phi, 2) == 5


def test_conditional_expectation_transitive():
    act = finite_action(OCT_SWAP)
    phi = (Fraction(3, 4), Fraction(1, 4))
    for point in (0, 1):
        assert conditional_expectation_finite(act, phi, point) \
            == Fraction(1, 2)


def test_cesaro_running_means():
    vals = [Fraction(1), Fraction(0), Fraction(1)]
    assert cesaro_averages(vals) == [1, Fraction(1, 2), Fraction(2, 3)]
    assert cesaro_averages([]) == []


def _perm_power(perm, k):
    out = tuple(range(len(perm)))
    for _ in range(k):
        out = tuple(perm[x] for x in out)
    return out


def _octagon_power_action(rng, size):
    """Tables that are powers of one permutation.

    Powers commute, and the vertex words contain each letter with its
    inverse exactly once, so the exponents cancel no matter the draw.
    """
    sigma = tuple(rng.sample(range(size), size))
    inverse = [0] * size
    for i, v in enumerate(sigma):
        inverse[v] = i
    inverse = tuple(inverse)
    tables = {}
    for name in OCTAGON_LETTERS:
        k = rng.randrange(size)
        tables[name] = _perm_power(sigma, k)
        tables[name.upper()] = _perm_power(inverse, k)
    return finite_action(tables)


def _sl2z_mixed_action(rng, size):
    """Random involution sigma and order three pi, with T_T = pi o sigma."""
    points = list(range(size))
    rng.shuffle(points)
    sigma = list(range(size))
    for i in range(0, size - 1, 2):
        a, b = points[i], points[i + 1]
        sigma[a], sigma[b] = b, a
    rng.shuffle(points)
    pi = list(range(size))
    for i in range(0, size - 2, 3):
        a, b, c = points[i], points[i + 1], points[i + 2]
        pi[a], pi[b], pi[c] = b, c, a
    t_cap = tuple(pi[sigma[x]] for x in range(size))
    t_low = tuple(sigma[pi[pi[x]]] for x in range(size))
    return finite_action({"s": tuple(sigma), "t": t_low, "T": t_cap})


def test_random_octagon_actions_recurrence_vs_brute():
    domain, coding = octagon_setup()
    rng = random.Random(20260815)
    for _ in range(10):
        size = rng.randrange(2, 9)
        act = _octagon_power_action(rng, size)
        validate_action(domain, act)
        phi = [rng.randrange(-3, 7) for _ in range(size)]
        point = rng.randrange(size)
        series = spherical_average(coding, act, phi, point, 3)
        assert series[3] == brute_sphere_average(coding, act, phi, point, 3)
        assert series[2] == brute_sphere_average(coding, act, phi, point, 2)


def test_random_sl2z_actions_recurrence_vs_brute():
    domain = get_preset("sl2z")
    coding = MarkovCoding(domain)
    rng = random.Random(9157)
    for _ in range(10):
        size = rng.randrange(2, 9)
        act = _sl2z_mixed_action(rng, size)
        validate_action(domain, act)
        phi = [rng.randrange(-3, 7) for _ in range(size)]
        point = rng.randrange(size)
        series = spherical_average(coding, act, phi, point, 5)
        for n in range(6):
            assert series[n] == brute_sphere_average(
                coding, act, phi, point, n)


def test_torus_constant_frequency_is_exactly_one():
    coding = MarkovCoding(get_preset("sl2z"))
    act = torus_action(SL2Z_TORUS)
    phi = {(0, 0): 1.0}
    series = spherical_average(coding, act, phi, (Fraction(1, 3), 0), 5)
    assert all(abs(v - 1.0) < 1e-14 for v in series)


def test_torus_transport_matches_point_walk():
    coding = MarkovCoding(get_preset("sl2z"))
    act = torus_action(SL2Z_TORUS)
    phi = {(1, 0): 0.5, (0, 1): 0.25 + 0.1j, (1, -1): -0.75}
    point = (Fraction(1, 3), Fraction(1, 7))
    series = spherical_average(coding, act, phi, point, 4)
    import cmath

    def observe(x):
        total = 0j
        for k, coeff in phi.items():
            phase = sum(Fraction(c) * v for c, v in zip(k, x)) % 1
            total += coeff * cmath.exp(2j * cmath.pi * float(phase))
        return total

    succ = coding.successors
    for n in range(1, 5):
        seqs = [(j,) for j in range(len(coding.letters))]
        for _ in range(n - 1):
            seqs = [seq + (nx,) for seq in seqs for nx in succ[seq[-1]]]
        total = 0j
        for seq in seqs:
            x = point
            for idx in reversed(seq):
                x = act.apply(coding.letters[idx], x)
            total += observe(x)
        assert abs(series[n] - total / len(seqs)) < 1e-10


def test_torus_word_cap_and_budget():
    coding = MarkovCoding(get_preset("sl2z"))
    act = torus_action(SL2Z_TORUS)
    phi = {(1, 0): 1.0}
    with pytest.raises(CodingError, match="capped at word length"):
        spherical_average(coding, act, phi, (0, 0), 13)
    with pytest.raises(CodingError, match="dimension"):
        spherical_average(coding, act, phi, (0, 0, 0), 2)
    with pytest.raises(CodingError, match="dimension"):
        spherical_average(coding, act, {(1, 0, 0): 1.0}, (0, 0), 2)


def test_torus_budget_guard(monkeypatch):
    coding = MarkovCoding(get_preset("sl2z"))
    act = torus_action(SL2Z_TORUS)
    monkeypatch.setattr(ergodic, "TORUS_BUDGET", 10)
    with pytest.raises(CodingError, match="over the budget"):
        spherical_average(coding, act, {(1, 0): 1.0}, (0, 0), 4)


def test_torus_frequency_range_guard(monkeypatch):
    coding = MarkovCoding(get_preset("sl2z"))
    act = torus_action(SL2Z_TORUS)
    monkeypatch.setattr(ergodic, "FREQ_BITS", 2)
    with pytest.raises(CodingError, match="63 bit|range"):
        spherical_average(coding, act, {(5, 0): 1.0}, (0, 0), 3)


def test_word_average_matches_sequence_average_when_injective():
    # the triangle coding has multiplicity one everywhere, so counting
    # words and counting sequences is the same average
    domain = get_preset("triangle")
    coding = MarkovCoding(domain)
    act = finite_action({"a": (1, 0, 2, 3), "b": (0, 1, 3, 2),
                         "c": (0, 1, 2, 3)})
    validate_action(domain, act)
    phi = (1, 0, 0, 2)
    for point in (0, 2):
        word_avg, seq_avg = word_sphere_average(coding, act, phi, point, 5)
        assert word_avg == seq_avg
        assert seq_avg == spherical_average(coding, act, phi, point, 5)[5]


def test_word_average_vs_recurrence_octagon():
    domain, coding = octagon_setup()
    act = finite_action(OCT_SWAP)
    phi = (1, 0)
    series = spherical_average(coding, act, phi, 0, 4)
    for n in (2, 3, 4):
        word_avg, seq_avg = word_sphere_average(coding, act, phi, 0, n)
        assert seq_avg == series[n]
        assert isinstance(word_avg, Fraction)


def test_brute_requires_finite():
    coding = MarkovCoding(get_preset("sl2z"))
    act = torus_action(SL2Z_TORUS)
    with pytest.raises(CodingError, match="finite"):
        brute_sphere_average(coding, act, {(0, 0): 1.0}, (0, 0), 2)
    with pytest.raises(CodingError, match="finite"):
        conditional_expectation_finite(act, (1, 0), 0)
