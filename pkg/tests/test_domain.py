import math
from fractions import Fraction

import pytest

from bscoding.domain import (
    FundamentalDomain,
    get_preset,
    ideal_triangle_domain,
    sl2z_domain,
    surface_domain,
)
from bscoding.exceptions import GeometryError
from bscoding.moebius import BoundaryPoint, Geodesic, MobiusTransform, same_geodesic


def _geo(a, b):
    return Geodesic(BoundaryPoint.from_real(a), BoundaryPoint.from_real(b))


def test_sl2z_verify():
    dom = sl2z_domain()
    report = dom.verify()
    assert report["n_sides"] == 4
    assert report["letters"] == ["T", "s", "t"]
    assert report["interior_vertices"] == 3
    assert report["vertex_orbits"] == 2


def test_sl2z_generators_and_involution():
    dom = sl2z_domain()
    gens = dom.generators()
    assert gens["t"].apply_real(0) == 1
    assert gens["T"].apply_real(0) == -1
    assert gens["s"].apply_real(2) == Fraction(-1, 2)
    inv = dom.name_involution()
    assert inv == {"t": "T", "T": "t", "s": "s"}


def test_sl2z_vertex_cycles():
    dom = sl2z_domain()
    by_vertex = {c.vertex: c for c in dom.vertex_cycles()}
    assert set(by_vertex) == {1, 2, 3}

    rho = by_vertex[1]
    assert (rho.period, rho.multiplier, rho.n) == (2, 3, 3)
    assert rho.letters_period == ("T", "s")
    assert rho.letters == ("T", "s") * 3
    expected = [_geo(Fraction(-1, 2), math.inf), _geo(-2, 0), _geo(-1, 1)]
    assert len(rho.distinct_walls) == 3
    for wall, want in zip(rho.distinct_walls, expected):
        assert same_geodesic(wall, want)

    mid = by_vertex[2]
    assert (mid.period, mid.multiplier, mid.n) == (1, 2, 1)
    assert mid.letters_period == ("s",)
    assert same_geodesic(mid.distinct_walls[0], _geo(-1, 1))

    rho1 = by_vertex[3]
    assert (rho1.period, rho1.multiplier, rho1.n) == (2, 3, 3)
    assert rho1.letters_period == ("s", "T")
    walls = rho1.distinct_walls
    wanted = [_geo(-1, 1), _geo(0, 2), _geo(Fraction(1, 2), math.inf)]
    for wall, want in zip(walls, wanted):
        assert same_geodesic(wall, want)

    # rho and rho + 1 lie in one orbit, i in its own
    assert rho.orbit() == rho1.orbit() == frozenset({1, 3})
    assert mid.orbit() == frozenset({2})
    assert len(dom.orbit_representatives()) == 2


def test_sl2z_walls_are_exact():
    dom = sl2z_domain()
    for cyc in dom.vertex_cycles():
        for wall in cyc.walls:
            assert wall.u.exact and wall.v.exact


def test_sl2z_angle_sums():
    dom = sl2z_domain()
    for cyc in dom.vertex_cycles():
        assert abs(cyc.angle_sum * cyc.multiplier - 2 * math.pi) < 1e-9


def test_ideal_triangle():
    dom = ideal_triangle_domain()
    report = dom.verify()
    assert report["interior_vertices"] == 0
    assert report["orbit_words"] == []
    assert dom.vertex_cycles() == []
    gens = dom.generators()
    for name in "abc":
        g = gens[name]
        assert (g * g).is_identity()
    # each side geodesic is exact and swapped by its own label
    for side in dom.sides:
        assert side.partner == side.index
        u, v = side.geodesic.endpoints()
        assert side.label.apply(u) == v


def test_octagon():
    dom = surface_domain(2)
    report = dom.verify()
    assert report["n_sides"] == 8
    assert report["vertex_orbits"] == 1
    cyc = dom.orbit_representatives()[0]
    assert (cyc.period, cyc.multiplier, cyc.n) == (8, 1, 4)
    assert sorted(cyc.letters_period) == sorted("abcdABCD")
    assert len(set(cyc.pivots)) == 8
    assert abs(cyc.angle_sum - 2 * math.pi) < 1e-9
    inv = dom.name_involution()
    assert inv["a"] == "A" and inv["B"] == "b"


def test_octagon_corner_angle():
    dom = surface_domain(2)
    for v in range(8):
        assert abs(dom._corner_angle(v) - math.pi / 4) < 1e-9


def test_genus_three_surface():
    dom = surface_domain(3)
    report = dom.verify()
    assert report["n_sides"] == 12
    cyc = dom.orbit_representatives()[0]
    assert (cyc.period, cyc.multiplier, cyc.n) == (12, 1, 6)


def test_json_round_trip():
    for name in ("sl2z", "triangle", "octagon"):
        dom = get_preset(name)
        back = FundamentalDomain.from_dict(dom.to_dict())
        back.verify()
        assert back.names == dom.names
        assert back.pairing == dom.pairing
        for s1, s2 in zip(dom.sides, back.sides):
            assert same_geodesic(s1.geodesic, s2.geodesic)
        # exactness survives the round trip
        if name == "sl2z":
            assert all(s.geodesic.u.exact for s in back.sides)
            assert all(g.exact for g in back.labels)


def test_bad_pairing_rejected():
    t = MobiusTransform(1, 1, 0, 1)
    with pytest.raises(GeometryError):
        FundamentalDomain(
            [BoundaryPoint.infinity(), 1j, complex(1, 1)],
            [1, 0, 2],
            [t, t.inverse(), t],
            ["x", "X", "y"],
        )


def test_swapped_labels_rejected():
    # interior and exterior labels exchanged must fail the crossing check
    dom = sl2z_domain()
    data = dom.to_dict()
    data["labels"] = [[1, -1, 0, 1], [0, -1, 1, 0], [0, -1, 1, 0], [1, 1, 0, 1]]
    data["names"] = ["t", "s", "s", "T"]
    bad = FundamentalDomain.from_dict(data)
    with pytest.raises(GeometryError):
        bad.verify()


def test_contains_interior():
    dom = sl2z_domain()
    assert dom.contains_interior(2j)
    assert dom.contains_interior(complex(0.2, 1.5))
    assert not dom.contains_interior(complex(0.9, 1.5))
    assert not dom.contains_interior(complex(0.0, 0.5))
    assert not dom.contains_interior(complex(-0.7, 0.9))
