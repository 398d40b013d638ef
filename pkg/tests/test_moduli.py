import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaudin.arith import EPS, RatFunc
from gaudin.errors import CoincidentPoints, UnstableConfiguration
from gaudin.moduli import (ModuliPoint, boundary_from_components,
                           chart_membership, decompose_boundary,
                           interior_forest, point_from_family,
                           point_from_marked_points, validate)

from conftest import distinct_rationals

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=6)
distinct_lists = st.lists(rationals, min_size=3, max_size=4, unique=True)


@pytest.mark.parametrize("space", ["M", "T", "F"])
def test_interior_point_roundtrip(space):
    rng = random.Random(7)
    for _ in range(25):
        z = distinct_rationals(rng, 4)
        pt = point_from_marked_points(space, z)
        assert validate(pt)["ok"]
        back = ModuliPoint.from_json(pt.to_json())
        assert back.nu == pt.nu and back.mu == pt.mu
        assert back.space == space and back.n == 4


@given(distinct_lists)
@settings(max_examples=50, deadline=None)
def test_interior_points_satisfy_relations(z):
    pt = point_from_marked_points("F", z)
    assert validate(pt)["ok"]
    s = pt.stratum
    assert s["petals"] == [sorted(range(1, len(z) + 1))] or \
        len(s["petals"]) == 1
    assert all(len(c) == 1 for c in s["collisions"])


@given(distinct_lists)
@settings(max_examples=30, deadline=None)
def test_interior_points_lie_in_caterpillar_chart(z):
    pt = point_from_marked_points("F", z)
    ok, vals = chart_membership(pt, interior_forest(len(z), "F"))
    assert ok


def test_coincident_points_rejected():
    with pytest.raises(CoincidentPoints):
        point_from_marked_points("F", [Fraction(1), Fraction(1)])


def test_validate_detects_corruption():
    pt = point_from_marked_points("F", [Fraction(0), Fraction(1),
                                        Fraction(3)])
    from gaudin.arith import P1Value
    pt.nu[(1, 2)] = P1Value.of(Fraction(999))
    rep = validate(pt)
    assert not rep["ok"]


def flower_assembly(rng, n_petals):
    label = 1
    petals = []
    offsets = distinct_rationals(rng, n_petals)
    for k in range(n_petals):
        npts = rng.randint(1, 3)
        pos = distinct_rationals(rng, npts)
        petals.append({"offset": offsets[k], "collapsed": False,
                       "points": [(p, label + i) for i, p in enumerate(pos)]})
        label += npts
    return {"kind": "flower", "petals": petals}


def test_boundary_roundtrip_random_flowers():
    rng = random.Random(11)
    done = 0
    while done < 10:
        asm = flower_assembly(rng, rng.randint(2, 3))
        pt = boundary_from_components(asm, "F")
        assert validate(pt)["ok"]
        dec = decompose_boundary(pt)
        got = [sorted(l for _, l in p["points"]) for p in dec["petals"]]
        want = [sorted(l for _, l in p["points"]) for p in asm["petals"]]
        assert sorted(got) == sorted(want)
        done += 1


def test_collapsed_petal_roundtrip():
    asm = {"kind": "flower", "petals": [
        {"offset": Fraction(0), "collapsed": True,
         "points": [(Fraction(0), 1), (Fraction(1), 2), (Fraction(3), 3)]},
        {"offset": Fraction(2), "collapsed": False,
         "points": [(Fraction(0), 4)]}]}
    pt = boundary_from_components(asm, "F")
    assert validate(pt)["ok"]
    s = pt.stratum
    assert s["petals"] == [[1, 2, 3], [4]]
    assert [1, 2, 3] in s["collisions"]
    dec = decompose_boundary(pt)
    coll = [p for p in dec["petals"] if p["collapsed"]]
    assert len(coll) == 1
    assert sorted(l for _, l in coll[0]["points"]) == [1, 2, 3]


def test_unstable_assembly_rejected():
    with pytest.raises(UnstableConfiguration):
        boundary_from_components(
            {"kind": "flower", "petals": [
                {"offset": Fraction(0), "collapsed": False,
                 "points": [(Fraction(0), 1)]},
                {"offset": Fraction(0), "collapsed": False,
                 "points": [(Fraction(0), 2)]}]}, "F")


def test_point_from_family_flower_stratum():
    # z(t) = (0, 1, 1/t): label 3 escapes to its own petal as t -> 0
    zt = [RatFunc.const(0), RatFunc.const(1), RatFunc.const(1) / EPS]
    pt = point_from_family("F", zt)
    assert validate(pt)["ok"]
    assert pt.stratum["petals"] == [[1, 2], [3]]


def test_point_from_family_collision_stratum():
    # z(t) = (0, 1, 1 + t, 5): labels 2 and 3 collide as t -> 0
    zt = [RatFunc.const(0), RatFunc.const(1),
          RatFunc.const(1) + EPS, RatFunc.const(5)]
    pt = point_from_family("M", zt)
    assert validate(pt)["ok"]
    assert [2, 3] in pt.stratum["collisions"]
