from fractions import Fraction

import pytest

from gaudin.liealg import CartanVector, build_sl, is_regular


@pytest.mark.parametrize("m", [2, 3, 4])
def test_dimension(m):
    L = build_sl(m)
    assert L.dim == m * m - 1
    assert L.rank == m - 1
    assert L.n_pos == m * (m - 1) // 2


@pytest.mark.parametrize("m", [2, 3])
def test_form_is_invariant(m):
    # B([x,y],z) + B(y,[x,z]) = 0 for all basis triples
    L = build_sl(m)

    def B(a, b):
        return L.gram[a][b]

    def ad(a, b):
        return L.bracket(a, b)

    for x in range(L.dim):
        for y in range(L.dim):
            xy = ad(x, y)
            for z in range(L.dim):
                xz = ad(x, z)
                lhs = sum(c * B(t, z) for t, c in xy.items())
                rhs = -sum(c * B(y, t) for t, c in xz.items())
                assert lhs == rhs


@pytest.mark.parametrize("m", [2, 3])
def test_jacobi_identity(m):
    L = build_sl(m)

    def ad(a, b):
        return L.bracket(a, b)

    def ad_elem(a, terms):
        out = {}
        for t, c in terms.items():
            for s, d in ad(a, t).items():
                out[s] = out.get(s, Fraction(0)) + c * d
        return {k: v for k, v in out.items() if v}

    for x in range(L.dim):
        for y in range(L.dim):
            for z in range(L.dim):
                total = {}
                for part in (ad_elem(x, ad(y, z)), ad_elem(y, ad(z, x)),
                             ad_elem(z, ad(x, y))):
                    for k, v in part.items():
                        total[k] = total.get(k, Fraction(0)) + v
                assert all(v == 0 for v in total.values())


def test_weight_cartan_roundtrip():
    L = build_sl(3)
    w = (Fraction(5, 3), Fraction(-1, 2))
    v = L.cartan_from_weight(w)
    assert L.weight_of_cartan(v) == w


def test_rho_takes_value_one_on_simple_coroots():
    for m in (2, 3, 4):
        L = build_sl(m)
        assert L.rho_on_h == tuple(Fraction(1) for _ in range(L.rank))


def test_regularity():
    L = build_sl(2)
    assert is_regular(CartanVector((Fraction(1),)), L)
    assert not is_regular(CartanVector((Fraction(0),)), L)
    L3 = build_sl(3)
    # a wall of the second simple root
    assert not is_regular(L3.cartan_from_weight((Fraction(3), Fraction(0))), L3)
    assert is_regular(L3.cartan_from_weight((Fraction(3), Fraction(1))), L3)
