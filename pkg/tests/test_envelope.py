from fractions import Fraction

import pytest

from gaudin.envelope import (UEElement, cartan_element, casimir_element,
                             commutator, delta_embed, iota0_reduce,
                             omega_pair, psi_reduce)
from gaudin.liealg import CartanVector, build_sl
from gaudin.reps import Irrep, TensorRep, matrix_of


@pytest.mark.parametrize("m", [2, 3])
def test_omega_splits_into_triangular_parts(m):
    L = build_sl(m)
    full = omega_pair(L, 2, 0, 1)
    parts = (omega_pair(L, 2, 0, 1, part="plus")
             + omega_pair(L, 2, 0, 1, part="zero")
             + omega_pair(L, 2, 0, 1, part="minus"))
    assert (full - parts).is_zero()


@pytest.mark.parametrize("m", [2, 3])
def test_omega_is_symmetric_in_its_slots(m):
    L = build_sl(m)
    assert (omega_pair(L, 2, 0, 1) - omega_pair(L, 2, 1, 0)).is_zero()


def test_infinitesimal_braid_relation():
    # [Omega^(12), Omega^(13) + Omega^(23)] = 0, but [Omega^(12), Omega^(13)] != 0
    L = build_sl(2)
    o12 = omega_pair(L, 3, 0, 1)
    o13 = omega_pair(L, 3, 0, 2)
    o23 = omega_pair(L, 3, 1, 2)
    assert commutator(o12, o13 + o23).is_zero()
    assert not commutator(o12, o13).is_zero()


@pytest.mark.parametrize("m,lam", [(2, (1,)), (2, (3,)), (3, (1, 1))])
def test_casimir_acts_as_scalar(m, lam):
    L = build_sl(m)
    V = TensorRep([Irrep(L, lam)])
    M = matrix_of(casimir_element(L, 1, 0), V)
    c = M[0][0]
    expected = [[c if i == j else Fraction(0) for j in range(V.dim)]
                for i in range(V.dim)]
    assert M == expected
    # scalar = (lam, lam + 2 rho) under the trace-form pairing
    lam2 = tuple(Fraction(x) for x in lam)
    shifted = tuple(l + 2 * r for l, r in zip(lam2, L.rho_on_h))
    assert c == L.weight_pairing(lam2, shifted)


def test_delta_embed_is_a_coproduct_on_the_casimir():
    # Delta(omega) = omega^(1) + omega^(2) + 2 Omega^(12)
    L = build_sl(2)
    w = casimir_element(L, 1, 0)
    lhs = delta_embed([[0, 1]], w, 2)
    rhs = (casimir_element(L, 2, 0) + casimir_element(L, 2, 1)
           + omega_pair(L, 2, 0, 1).scale(Fraction(2)))
    assert (lhs - rhs).is_zero()


def test_cartan_element_matrix_is_diagonal():
    L = build_sl(2)
    V = TensorRep([Irrep(L, (1,)), Irrep(L, (1,))])
    h1 = cartan_element(L, 2, 0, CartanVector((Fraction(1),)))
    M = matrix_of(h1, V)
    for i in range(V.dim):
        for j in range(V.dim):
            if i != j:
                assert M[i][j] == 0


def test_psi_reduce_kills_site_zero():
    # psi of Omega^(0j)/(0 - z_j) terms produces trig tails; sanity via the
    # Hamiltonian identity checked elsewhere; here: psi on a pure site-0
    # Cartan letter multiplies by the theta eigenvalue and drops the site.
    L = build_sl(2)
    theta = L.cartan_from_weight((Fraction(5, 2),))
    h0 = cartan_element(L, 2, 0, CartanVector((Fraction(1),)))
    red = psi_reduce(h0, theta)
    V = TensorRep([Irrep(L, (1,))])
    M = matrix_of(red, V)
    assert M[0][0] == Fraction(5, 2)


def test_iota0_reduce_drops_the_marked_site():
    L = build_sl(2)
    x = omega_pair(L, 3, 0, 1)
    y = iota0_reduce(x)
    assert y.n == 2
