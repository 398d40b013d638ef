import random
from fractions import Fraction

import pytest


def distinct_rationals(rng: random.Random, n: int, nonzero: bool = False,
                       span: Fraction = 9):
    out = []
    while len(out) < n:
        c = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if c in out or (nonzero and c == 0):
            continue
        out.append(c)
    return out


def symbolic_inhom_span(L, zt, chi):
    """Quadratic span of the inhomogeneous model at a rational-function
    family of points, as a RatFunc-coefficient span (plus Casimirs)."""
    from gaudin.arith import RatFunc
    from gaudin.envelope import cartan_element, casimir_element, omega_pair
    from gaudin.gaudin import QuadraticSpan
    n = len(zt)
    one = RatFunc.const(1)
    els = []
    for i in range(n):
        h = cartan_element(L, n, i, chi).scale(one)
        for j in range(n):
            if j != i:
                h = h + omega_pair(L, n, i, j).scale(one / (zt[i] - zt[j]))
        els.append(h)
    els += [casimir_element(L, n, i).scale(one) for i in range(n)]
    return QuadraticSpan(L, n, els)


def symbolic_homogeneous_rows(L, zt):
    from gaudin.arith import RatFunc
    from gaudin.envelope import omega_pair, UEElement
    n = len(zt)
    one = RatFunc.const(1)
    els = []
    for i in range(n):
        h = UEElement.zero(L, n).scale(one)
        for j in range(n):
            if j != i:
                h = h + omega_pair(L, n, i, j).scale(one / (zt[i] - zt[j]))
        els.append(h)
    return els


def symbolic_homogeneous_span(L, zt):
    from gaudin.arith import RatFunc
    from gaudin.envelope import casimir_element
    from gaudin.gaudin import QuadraticSpan
    n = len(zt)
    one = RatFunc.const(1)
    els = symbolic_homogeneous_rows(L, zt)
    els += [casimir_element(L, n, i).scale(one) for i in range(n)]
    return QuadraticSpan(L, n, els)


@pytest.fixture
def rng():
    return random.Random(20260826)
