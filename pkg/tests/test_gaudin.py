import random
from fractions import Fraction

import pytest

from gaudin.arith import EPS, RatFunc
from gaudin.envelope import psi_reduce
from gaudin.errors import CoincidentPoints, NonRegularChi, ZeroPoint
from gaudin.gaudin import (hamiltonians, interior_span, iota0_span, quad_span,
                           span_limit_eps0, span_of)
from gaudin.liealg import CartanVector, build_sl
from gaudin.moduli import point_from_family, point_from_marked_points

from conftest import distinct_rationals

L2 = build_sl(2)
CHI = CartanVector((Fraction(1),), role="chi")
THETA = L2.cartan_from_weight((Fraction(5, 2),))


@pytest.mark.parametrize("kind,kw", [
    ("homogeneous", {}),
    ("trigonometric", {"theta": THETA}),
    ("inhomogeneous", {"chi": CHI}),
    ("dynamical", {"chi": CHI}),
])
def test_families_commute_exactly(kind, kw):
    rng = random.Random(hash(kind) % 1000)
    z = distinct_rationals(rng, 2, nonzero=True)
    hs = hamiltonians(kind, L2, z, check=False, **kw)
    assert hs.pairwise_commute()


def test_homogeneous_hamiltonians_sum_to_zero():
    hs = hamiltonians("homogeneous", L2,
                      [Fraction(0), Fraction(1), Fraction(3)], check=False)
    total = hs.elements[0]
    for h in hs.elements[1:]:
        total = total + h
    assert total.is_zero()


def test_trig_is_the_reduction_of_homogeneous_at_zero():
    z = [Fraction(1), Fraction(3)]
    hs = hamiltonians("trigonometric", L2, z, theta=THETA, check=False)
    hom = hamiltonians("homogeneous", L2, [Fraction(0)] + z, check=False)
    for i, h in enumerate(hs.elements):
        assert (psi_reduce(hom.elements[i + 1], THETA) - h).is_zero()


def test_input_validation():
    with pytest.raises(CoincidentPoints):
        hamiltonians("homogeneous", L2, [Fraction(1), Fraction(1)])
    with pytest.raises(ZeroPoint):
        hamiltonians("trigonometric", L2, [Fraction(0), Fraction(1)],
                     theta=THETA)
    with pytest.raises(NonRegularChi):
        hamiltonians("dynamical", L2, [Fraction(0), Fraction(1)],
                     chi=CartanVector((Fraction(0),), role="chi"))


@pytest.mark.parametrize("kind,space,kw", [
    ("homogeneous", "M", {}),
    ("trigonometric", "M", {"theta": THETA}),
    ("inhomogeneous", "F", {"chi": CHI}),
])
def test_interior_quad_span_matches_hamiltonian_span(kind, space, kw):
    z = [Fraction(1), Fraction(3)]
    if kind == "trigonometric":
        pt = point_from_marked_points(space, [Fraction(0)] + z)
    else:
        pt = point_from_marked_points(space, z)
    direct = interior_span(kind, L2, z, **kw)
    via_chart = quad_span(L2, pt, kind, **kw)
    assert direct == via_chart


def test_family_span_limit_is_the_inhomogeneous_span():
    z = [Fraction(1), Fraction(3)]
    fam = interior_span("family", L2, z, chi=CHI)
    lim = span_limit_eps0(fam)
    assert lim == interior_span("inhomogeneous", L2, z, chi=CHI)


def test_flat_degeneration_to_a_flower_boundary_point():
    # family z(t) = (0, 1, 1/t) in the flower space: the limit of the
    # interior spans equals the span attached to the boundary point
    from conftest import symbolic_inhom_span
    zt = [RatFunc.const(0), RatFunc.const(1), RatFunc.const(1) / EPS]
    fam = symbolic_inhom_span(L2, zt, CHI)
    lim = span_limit_eps0(fam)
    pt = point_from_family("F", zt)
    assert lim == quad_span(L2, pt, "inhomogeneous", chi=CHI)


def test_iota0_invariance():
    rng = random.Random(17)
    for _ in range(3):
        pts = distinct_rationals(rng, 4)
        z0, z = pts[0], pts[1:]
        iota0_span(L2, z0, z, check=True)


def test_span_contains_and_equality():
    z = [Fraction(1), Fraction(3)]
    s = interior_span("inhomogeneous", L2, z, chi=CHI)
    hs = hamiltonians("inhomogeneous", L2, z, chi=CHI, check=False)
    for el in hs.elements:
        assert s.contains(el)
    assert s == s
