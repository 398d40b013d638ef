import random
from fractions import Fraction

import numpy as np
import pytest

from gaudin.envelope import cartan_element, omega_pair
from gaudin.errors import FormNotPositive, SpectrumCollision
from gaudin.gaudin import hamiltonians
from gaudin.liealg import CartanVector, build_sl
from gaudin.reps import Irrep, TensorRep, matrix_of, tensor_standard_form
from gaudin.spectra import (CommutingFamily, circle_point, compact_trig_theta,
                            inhom_matrices, is_cyclic, is_normal_family,
                            joint_eigenbasis, matrices_for,
                            monodromy_permutation, simple_spectrum_exact,
                            trig_matrices)

from conftest import distinct_rationals

L2 = build_sl(2)
V11 = TensorRep([Irrep(L2, (1,)), Irrep(L2, (1,))])
CHI = CartanVector((Fraction(1),), role="chi")


def inhom_family(z=(Fraction(0), Fraction(1))):
    hs = hamiltonians("inhomogeneous", L2, list(z), chi=CHI, check=False)
    htot = cartan_element(L2, 2, 0, CHI) + cartan_element(L2, 2, 1, CHI)
    return CommutingFamily(matrices_for(list(hs.elements) + [htot], V11))


def test_omega_eigenvalues_on_two_spins():
    F = CommutingFamily(matrices_for([omega_pair(L2, 2, 0, 1)], V11))
    S = joint_eigenbasis(F)
    vals = sorted(round(row[0].real, 9) for row in S.eigenvalue_table)
    assert vals == [-1.5, 0.5, 0.5, 0.5]
    assert not S.simple


def test_identity_family_is_not_simple():
    F = CommutingFamily([np.eye(3)])
    assert not joint_eigenbasis(F).simple


def test_inhomogeneous_family_is_simple_and_matches_exact_oracle():
    F = inhom_family()
    S = joint_eigenbasis(F)
    assert S.simple
    assert S.residual_max < 1e-9
    hs = hamiltonians("inhomogeneous", L2, [Fraction(0), Fraction(1)],
                      chi=CHI, check=False)
    htot = cartan_element(L2, 2, 0, CHI) + cartan_element(L2, 2, 1, CHI)
    exact = simple_spectrum_exact(
        [matrix_of(x, V11) for x in list(hs.elements) + [htot]], seed=0)
    assert exact == S.simple


def test_eigenlines_orthogonal_for_normal_family():
    F = inhom_family()
    S = joint_eigenbasis(F)
    G = np.array([[float(x) for x in row]
                  for row in tensor_standard_form(V11)])
    for a in range(4):
        for b in range(a + 1, 4):
            assert abs(S.eigenlines[a].conj() @ G @ S.eigenlines[b]) < 1e-9


def test_cyclicity():
    F = inhom_family()
    assert is_cyclic(F, np.ones(4))
    assert not is_cyclic(F, np.zeros(4))
    assert not is_cyclic(CommutingFamily([np.eye(3)]), np.ones(3))


def test_normality():
    F = inhom_family()
    G = tensor_standard_form(V11)
    assert is_normal_family(F, G)
    bad = CommutingFamily([np.array([[0.0, 1.0], [0.0, 0.0]])])
    assert not is_normal_family(bad, np.eye(2))
    with pytest.raises(FormNotPositive):
        is_normal_family(bad, -np.eye(2))


def test_split_trig_simple_spectrum():
    # real points, big dominant theta: simple spectrum per weight space
    rng = random.Random(2)
    for _ in range(5):
        z = distinct_rationals(rng, 2, nonzero=True)
        theta = L2.cartan_from_weight((Fraction(rng.randint(50, 90)),))
        hs = hamiltonians("trigonometric", L2, z, theta=theta, check=False)
        htot = cartan_element(L2, 2, 0, CHI) + cartan_element(L2, 2, 1, CHI)
        F = CommutingFamily(matrices_for(list(hs.elements) + [htot], V11))
        assert joint_eigenbasis(F).simple


def test_compact_trig_normal_for_plus_sign_only():
    L = build_sl(2)
    V = TensorRep([Irrep(L, (2,)), Irrep(L, (2,))])
    G = np.array([[float(x) for x in row] for row in tensor_standard_form(V)])
    z = [circle_point(Fraction(1, 3)), circle_point(Fraction(5, 2))]
    minus_failed = False
    for mu_key, idx in V.weight_spaces().items():
        for sign, want in ((1, True), (-1, None)):
            th = compact_trig_theta(L, mu_key, [0.7], sign=sign)
            mats = trig_matrices(L, V, z, th)
            sub = [M[np.ix_(idx, idx)] for M in mats]
            ok = is_normal_family(CommutingFamily(sub), G[np.ix_(idx, idx)])
            if want is True:
                assert ok
            elif not ok:
                minus_failed = True
    assert minus_failed  # the opposite sign convention really is wrong


def exchange_family(t):
    c, r = 0.0, 1.0
    w = np.exp(1j * np.pi * float(t))
    z = [c - r * w, c + r * w]
    return CommutingFamily(inhom_matrices(L2, V11, z, [1.0]))


def test_monodromy_constant_loop_is_identity():
    F0 = exchange_family(0)
    perm = monodromy_permutation(lambda t: F0, steps=4)
    assert perm == list(range(4))


def test_monodromy_forward_backward_is_identity():
    perm = monodromy_permutation(
        lambda t: exchange_family(min(t, 1 - t) * 2), steps=8)
    assert perm == list(range(4))


def test_monodromy_exchange_squares_to_identity():
    perm = monodromy_permutation(exchange_family, steps=16)
    sq = [perm[perm[k]] for k in range(4)]
    assert sq == list(range(4))
    # stable under refinement
    assert perm == monodromy_permutation(exchange_family, steps=32)
