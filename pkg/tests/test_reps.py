from fractions import Fraction

import pytest

from gaudin.envelope import omega_pair
from gaudin.liealg import build_sl
from gaudin.reps import (Irrep, TensorRep, TruncatedVerma, default_depth,
                         is_generic_theta, matrix_of, matrix_on_subspace,
                         singular_vectors, standard_form,
                         tensor_standard_form, weyl_dim)


@pytest.mark.parametrize("m,lam", [(2, (1,)), (2, (4,)), (3, (1, 0)),
                                   (3, (1, 1)), (3, (2, 1)), (4, (1, 0, 1))])
def test_irrep_dimension_matches_weyl_formula(m, lam):
    L = build_sl(m)
    assert Irrep(L, lam).dim == weyl_dim(m, lam)


def test_weight_space_dims_sum_and_symmetry():
    L = build_sl(2)
    V = TensorRep([Irrep(L, (2,)), Irrep(L, (1,))])
    ws = V.weight_spaces()
    assert sum(len(v) for v in ws.values()) == V.dim
    for key, idx in ws.items():
        neg = tuple(-c for c in key)
        assert len(ws[neg]) == len(idx)


def test_singular_vector_count_in_verma_tensor():
    # generically, singular vectors of offset weight mu in
    # M(theta) (x) V(1) (x) V(1) biject with the mu weight space of V(1)(x)V(1)
    L = build_sl(2)
    theta = (Fraction(7, 3),)
    depth = default_depth([(1,), (1,)], L)
    assert is_generic_theta(L, theta, 2 * depth)
    W = TensorRep([TruncatedVerma(L, theta, depth),
                   Irrep(L, (1,)), Irrep(L, (1,))])
    for mu, expected in ((Fraction(-2), 1), (Fraction(0), 2),
                        (Fraction(2), 1)):
        assert len(singular_vectors(W, (mu,))) == expected


def test_standard_form_small_cases():
    L = build_sl(2)
    g1 = standard_form(Irrep(L, (1,)))
    assert g1 == ((1, 0), (0, 1))
    g2 = standard_form(Irrep(L, (2,)))
    assert [g2[i][i] for i in range(3)] == [1, 2, 4]
    assert all(g2[i][j] == 0 for i in range(3) for j in range(3) if i != j)


def test_standard_form_positive_definite_sl3_adjoint():
    L = build_sl(3)
    g = standard_form(Irrep(L, (1, 1)))
    # symmetric with positive leading principal minors
    from gaudin.linalg import rref
    n = len(g)
    assert all(g[i][j] == g[j][i] for i in range(n) for j in range(n))
    minor = [[Fraction(0)]]
    import numpy as np
    arr = np.array([[float(x) for x in row] for row in g])
    for k in range(1, n + 1):
        assert np.linalg.det(arr[:k, :k]) > 0


def test_tensor_standard_form_is_kronecker():
    L = build_sl(2)
    V = TensorRep([Irrep(L, (1,)), Irrep(L, (2,))])
    G = tensor_standard_form(V)
    diag = [G[i][i] for i in range(V.dim)]
    assert sorted(diag) == sorted([a * b for a in (1, 1) for b in (1, 2, 4)])


def test_shapovalov_gram_positive_for_dominant_weight():
    L = build_sl(2)
    M = TruncatedVerma(L, (Fraction(10),), 3)
    idx = list(range(M.dim))
    g = M.shapovalov_gram(idx)
    import numpy as np
    arr = np.array([[float(x) for x in row] for row in g])
    assert np.allclose(arr, arr.T)
    assert np.all(np.linalg.eigvalsh(arr) > 0)


def test_matrix_on_subspace_agrees_with_full_matrix():
    L = build_sl(2)
    V = TensorRep([Irrep(L, (1,)), Irrep(L, (1,))])
    x = omega_pair(L, 2, 0, 1)
    idx = V.weight_spaces()[(Fraction(0),)]
    vecs = [{i: Fraction(1)} for i in idx]
    sub = matrix_on_subspace(x, V, idx, vecs)
    full = matrix_of(x, V)
    assert sub == [[full[r][c] for c in idx] for r in idx]
