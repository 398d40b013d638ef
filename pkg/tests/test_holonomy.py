import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaudin.arith import P1Value
from gaudin.envelope import commutator
from gaudin.gaudin import forest_for
from gaudin.holonomy import (HolonomyAlgebra, gamma_map, q_of_curve,
                             q_of_points, reconstruct_coordinates)
from gaudin.liealg import CartanVector, build_sl
from gaudin.moduli import (boundary_from_components, chart_membership,
                           interior_forest, point_from_marked_points)

from conftest import distinct_rationals

distinct3 = st.lists(st.fractions(min_value=-9, max_value=9,
                                  max_denominator=6),
                     min_size=3, max_size=3, unique=True)


@given(distinct3)
@settings(max_examples=40, deadline=None)
def test_point_span_reconstructs_coordinates(z):
    H = HolonomyAlgebra("r_n", 3)
    Q = q_of_points(H, z)
    nu = reconstruct_coordinates(Q)["nu"]
    for i in range(1, 4):
        for j in range(1, 4):
            if i != j:
                assert nu[(i, j)] == P1Value.of(
                    Fraction(1) / (z[i - 1] - z[j - 1]))


@given(distinct3)
@settings(max_examples=20, deadline=None)
def test_curve_span_of_interior_chart_matches_point_span(z):
    H = HolonomyAlgebra("r_n", 3)
    pt = point_from_marked_points("F", z)
    ok, vals = chart_membership(pt, interior_forest(3, "F"))
    assert ok
    Qc = q_of_curve(H, interior_forest(3, "F"), vals)
    nu = reconstruct_coordinates(Qc)["nu"]
    assert nu == reconstruct_coordinates(q_of_points(H, z))["nu"]


def test_boundary_curve_span_reconstructs_boundary_coordinates():
    rng = random.Random(5)
    for _ in range(5):
        offs = distinct_rationals(rng, 2)
        pos = distinct_rationals(rng, 2)
        asm = {"kind": "flower", "petals": [
            {"offset": offs[0], "collapsed": False,
             "points": [(pos[0], 1), (pos[1], 2)]},
            {"offset": offs[1], "collapsed": False,
             "points": [(Fraction(0), 3)]}]}
        pt = boundary_from_components(asm, "F")
        forest = forest_for(pt)
        ok, vals = chart_membership(pt, forest)
        assert ok
        H = HolonomyAlgebra("r_n", 3)
        Q = q_of_curve(H, forest, vals)
        nu = reconstruct_coordinates(Q)["nu"]
        assert nu == pt.nu


@pytest.mark.parametrize("variant,kind,labels", [
    ("plain", "s_n", 3), ("chi", "r_n", 2), ("theta", "s_n", 3),
])
def test_gamma_images_of_point_spans_commute(variant, kind, labels):
    L = build_sl(2)
    H = HolonomyAlgebra(kind, labels)
    rng = random.Random(3)
    z = distinct_rationals(rng, labels)
    Q = q_of_points(H, z)
    theta = L.cartan_from_weight((Fraction(5, 2),))
    chi = CartanVector((Fraction(1),), role="chi")
    g = gamma_map(L, H, variant, theta=theta, chi=chi)
    els = [g(row) for row in Q.rows]
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            assert commutator(els[a], els[b]).is_zero()


def test_gamma_chi_hbar_images_commute():
    L = build_sl(2)
    eps = Fraction(1, 7)
    H = HolonomyAlgebra("rtilde_n", 2, hbar=eps)
    z = [Fraction(1), Fraction(3)]
    Q = q_of_points(H, z)
    chi = CartanVector((Fraction(1),), role="chi")
    g = gamma_map(L, H, "chi_hbar", chi=chi, hbar=eps)
    els = [g(row) for row in Q.rows]
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            assert commutator(els[a], els[b]).is_zero()
