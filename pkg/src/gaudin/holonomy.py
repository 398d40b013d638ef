"""Holonomy-type graded Lie algebras in degrees one and two, the commutative
subspaces attached to point configurations and to boundary curves, coordinate
reconstruction from such subspaces, and evaluation maps into tensor-product
enveloping algebras.

Kinds: "s_n" (generators t_ij), "r_n" (adds u_i), "rtilde_n" (the
one-parameter deformation; scalars are rational functions in the parameter).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import EPS, P1Value, RatFunc, Rational, rat
from .envelope import UEElement, cartan_element, omega_pair
from .errors import (ChartViolation, CoincidentPoints, PoleAtParameter,
                     ProjectionDegenerate)
from .liealg import CartanVector, LieAlgebraData
from .linalg import nullspace, rank as mat_rank, rref, in_row_space
from .moduli import PlanarBinaryForest, _leftmost, _rightmost, _walk


class HolonomyAlgebra:
    def __init__(self, kind: str, n: int, hbar=None):
        assert kind in ("s_n", "r_n", "rtilde_n")
        self.kind = kind
        self.n = n
        # the deformation parameter: symbolic by default, or a numeric value
        # (a numeric specialization keeps plain rational scalars)
        self.hbar = (EPS if hbar is None else hbar) if kind == "rtilde_n" else None
        self.ratfunc = kind == "rtilde_n" and self.hbar is EPS
        self.t_pairs = list(itertools.combinations(range(1, n + 1), 2))
        self.deg1_names: List[tuple] = [("t",) + p for p in self.t_pairs]
        if kind != "s_n":
            self.deg1_names += [("u", i) for i in range(1, n + 1)]
        self.deg1_dim = len(self.deg1_names)
        self.index = {nm: k for k, nm in enumerate(self.deg1_names)}

        # free degree-2 span: brackets [x_a, x_b], a < b
        self.br_pairs = list(itertools.combinations(range(self.deg1_dim), 2))
        self.br_index = {p: k for k, p in enumerate(self.br_pairs)}
        rel_rows = [self._rel_vector(r) for r in self._relations()]
        self._rel_rref, self._rel_pivots = rref(rel_rows)
        self._rel_rref = [r for r in self._rel_rref if any(r)]
        self.deg2_dim = len(self.br_pairs) - len(self._rel_rref)

    def _zero(self):
        return RatFunc.const(0) if self.ratfunc else Fraction(0)

    def _one(self):
        return RatFunc.const(1) if self.ratfunc else Fraction(1)

    def t(self, i: int, j: int) -> int:
        return self.index[("t", min(i, j), max(i, j))]

    def u(self, i: int) -> int:
        return self.index[("u", i)]

    def _relations(self):
        """Each relation: list of (sym_a, sym_b, coeff) meaning
        sum coeff * [x_a, x_b] = 0."""
        one, rels = self._one(), []
        for (i, j), (k, l) in itertools.combinations(self.t_pairs, 2):
            if not {i, j} & {k, l}:
                rels.append([(self.t(i, j), self.t(k, l), one)])
        for i, j, k in itertools.combinations(range(1, self.n + 1), 3):
            tij, tik, tjk = self.t(i, j), self.t(i, k), self.t(j, k)
            rels.append([(tij, tik, one), (tij, tjk, one)])
            rels.append([(tik, tij, one), (tik, tjk, one)])
        if self.kind == "s_n":
            return rels
        for (i, j) in self.t_pairs:
            for k in range(1, self.n + 1):
                if k not in (i, j):
                    rels.append([(self.t(i, j), self.u(k), one)])
            rels.append([(self.t(i, j), self.u(i), one),
                         (self.t(i, j), self.u(j), one)])
        for i, j in itertools.combinations(range(1, self.n + 1), 2):
            if self.kind == "r_n":
                rels.append([(self.u(i), self.u(j), one)])
            else:
                # [u_i, u_j] + hbar [u_i, t_ij] = 0
                rels.append([(self.u(i), self.u(j), one),
                             (self.u(i), self.t(i, j), one * self.hbar)])
        return rels

    def _rel_vector(self, rel):
        v = [self._zero()] * len(self.br_pairs)
        for a, b, c in rel:
            if a < b:
                v[self.br_index[(a, b)]] += c
            elif a > b:
                v[self.br_index[(b, a)]] -= c
        return v

    def bracket_deg2(self, v: Sequence, w: Sequence) -> List:
        """Canonical representative of [v, w] in the degree-2 quotient."""
        free = [self._zero()] * len(self.br_pairs)
        for a in range(self.deg1_dim):
            if not v[a]:
                continue
            for b in range(self.deg1_dim):
                if not w[b] or a == b:
                    continue
                c = v[a] * w[b]
                if a < b:
                    free[self.br_index[(a, b)]] += c
                else:
                    free[self.br_index[(b, a)]] -= c
        # reduce modulo the relation row space
        for row, piv in zip(self._rel_rref, self._rel_pivots):
            c = free[piv]
            if c:
                for k in range(piv, len(free)):
                    free[k] = free[k] - c * row[k]
        return free


class GradedSubspace:
    def __init__(self, H: HolonomyAlgebra, rows: Sequence[Sequence],
                 check_commutative: bool = True):
        self.H = H
        rr, piv = rref([list(r) for r in rows])
        self.rows = [r for r in rr if any(r)]
        self.pivots = piv[: len(self.rows)]
        self.rank = len(self.rows)
        if check_commutative and not self.is_commutative():
            raise ChartViolation("subspace is not commutative in degree 2")

    def is_commutative(self) -> bool:
        for a, b in itertools.combinations(self.rows, 2):
            if any(self.H.bracket_deg2(a, b)):
                return False
        return True

    def contains(self, vec: Sequence) -> bool:
        return in_row_space(self.rows, self.pivots, list(vec))

    def __eq__(self, other):
        return (isinstance(other, GradedSubspace) and self.H.kind == other.H.kind
                and self.rows == other.rows)

    def to_json(self):
        return [[str(c) for c in row] for row in self.rows]


def q_of_points(H: HolonomyAlgebra, z: Sequence[Rational],
                eps=None) -> GradedSubspace:
    """Span of the point-configuration vectors h_i."""
    n = H.n
    if H.kind == "rtilde_n" and eps is None:
        eps = H.hbar
    symbolic = eps is EPS or isinstance(eps, RatFunc)
    zz = [RatFunc.coerce(rat(c)) if symbolic else rat(c) for c in z]
    for i in range(n):
        for j in range(i + 1, n):
            if zz[i] == zz[j]:
                raise CoincidentPoints(f"z_{i+1} = z_{j+1}")
    e = EPS if symbolic else (rat(eps) if eps is not None else Fraction(0))
    if H.kind != "rtilde_n" and not symbolic and e != 0:
        raise ValueError("nonzero eps needs the deformed algebra")
    if H.kind == "rtilde_n" and e != H.hbar:
        raise ValueError("eps must match the algebra's deformation parameter")
    if H.kind == "rtilde_n" and not symbolic:
        for zi in zz:
            if 1 - e * zi == 0:
                raise PoleAtParameter("1 - eps*z_i = 0")
    one = RatFunc.const(1) if H.ratfunc else Fraction(1)
    zero = RatFunc.const(0) if H.ratfunc else Fraction(0)

    def coerce(c):
        return RatFunc.coerce(c) if H.ratfunc else c

    rows = []
    for i in range(1, n + 1):
        v = [zero] * H.deg1_dim
        if H.kind != "s_n":
            v[H.u(i)] = one
        for j in range(1, n + 1):
            if j != i:
                nuij = (1 - e * zz[j - 1]) / (zz[i - 1] - zz[j - 1])
                v[H.t(i, j)] += coerce(nuij)
        rows.append(v)
    Q = GradedSubspace(H, rows)
    if H.kind != "s_n":
        # sum of the generators: sum u_i + eps * sum t_ij
        total = [zero] * H.deg1_dim
        for i in range(1, n + 1):
            total[H.u(i)] = one
        if H.kind == "rtilde_n":
            for i, j in H.t_pairs:
                total[H.t(i, j)] = coerce(Fraction(1) * e) if not symbolic else EPS
        assert Q.contains(total)
        assert Q.rank == n
    else:
        assert Q.rank == n - 1
    return Q


def q_of_curve(H: HolonomyAlgebra, forest: PlanarBinaryForest,
               chart_values: Dict[tuple, Fraction]) -> GradedSubspace:
    """Span of the per-vertex chart vectors of a boundary curve."""
    n = H.n
    if forest.n != n:
        raise ChartViolation("forest size mismatch")
    zero = Fraction(0)
    rows = []
    for ti, path in forest.all_vertices():
        v = [zero] * H.deg1_dim
        tree_leaves = forest.leaves_of_tree(ti)
        if path is None:
            # stem: sum of u's over the tree plus cross-tree nu terms
            if H.kind == "s_n":
                continue
            for i in tree_leaves:
                v[H.u(i)] = Fraction(1)
                for j in range(1, n + 1):
                    if j == i or j in tree_leaves:
                        continue
                    v[H.t(i, j)] += chart_values[("nu", i, j)]
        else:
            sub = forest.subtree(ti, path)
            p, q = _rightmost(sub[0]), _leftmost(sub[1])
            left = [leaf for _, leaf in _walk(sub[0])]
            if H.kind == "s_n":
                for i in left:
                    for j in range(1, n + 1):
                        if j in left:
                            continue
                        v[H.t(i, j)] += chart_values[("ratio", p, q, i, j)]
            else:
                dpq = chart_values[("delta", p, q)]
                for i in left:
                    v[H.u(i)] = dpq
                    for j in range(1, n + 1):
                        if j == i or j in left:
                            continue
                        if j in tree_leaves:
                            v[H.t(i, j)] += chart_values[("dnu", p, q, i, j)]
                        else:
                            v[H.t(i, j)] += dpq * chart_values[("nu", i, j)]
        rows.append(v)
    Q = GradedSubspace(H, rows)
    expected = n - 1 if H.kind == "s_n" else n
    if Q.rank != expected:
        raise ChartViolation(f"curve subspace has rank {Q.rank}, expected {expected}")
    return Q


def reconstruct_coordinates(Q: GradedSubspace):
    """Recover nu_ij (all pairs) and mu_ijk (where defined) from a commutative
    subspace in the inhomogeneous algebra."""
    H = Q.H
    assert H.kind == "r_n"
    n = H.n
    nu: Dict[Tuple[int, int], P1Value] = {}
    mu: Dict[Tuple[int, int, int], Optional[P1Value]] = {}
    for i, j in itertools.permutations(range(1, n + 1), 2):
        cols = [H.u(i), H.u(j), H.t(i, j)]
        proj = [[row[c] for c in cols] for row in Q.rows]
        proj = [r for r in rref(proj)[0] if any(r)]
        if len(proj) != 2:
            raise ProjectionDegenerate(f"p_{i}{j}(Q) has rank {len(proj)}")
        normal = nullspace(proj, 3)
        assert len(normal) == 1
        A, B, C = normal[0]
        if A + B != 0:
            raise ProjectionDegenerate(f"p_{i}{j}(Q) normal not antisymmetric")
        nu[(i, j)] = P1Value(-A, C)
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        cols = [H.t(i, j), H.t(i, k), H.t(j, k)]
        proj = [[row[c] for c in cols] for row in Q.rows]
        proj = [r for r in rref(proj)[0] if any(r)]
        if len(proj) != 2:
            mu[(i, j, k)] = None
            continue
        normal = nullspace(proj, 3)
        A, B, C = normal[0]
        mu[(i, j, k)] = P1Value(-B, A)
    return {"nu": nu, "mu": mu}


def gamma_map(L: LieAlgebraData, H: HolonomyAlgebra, variant: str,
              theta: Optional[CartanVector] = None,
              chi: Optional[CartanVector] = None,
              hbar=None):
    """Linear map from degree 1 of the holonomy algebra into the enveloping
    tensor algebra.  Variants:
      plain    -- s_n on labels [n]: t_ij -> Omega^(ij)
      theta    -- s_{n+1}, label 1 distinguished:
                  t_{1,i} -> theta^(i-1) - sum_j OmegaMinus^(i-1, j)
      chi      -- r_n at hbar = 0: u_i -> chi^(i)
      chi_hbar -- rtilde_n: u_i -> chi^(i) - hbar * sum_j OmegaMinus^(ij)

    The images are ordinary tensor-algebra elements; for chi_hbar the scalar
    ring is rational functions of the parameter (no twisted multiplication).
    """
    if variant == "theta":
        n = H.n - 1
    else:
        n = H.n
    images: List[UEElement] = []
    for name in H.deg1_names:
        if name[0] == "t":
            _, i, j = name
            if variant == "theta":
                if i == 1:
                    x = cartan_element(L, n, j - 2, theta)
                    for jj in range(n):
                        x = x - omega_pair(L, n, j - 2, jj, part="minus")
                else:
                    x = omega_pair(L, n, i - 2, j - 2)
            else:
                x = omega_pair(L, n, i - 1, j - 1)
        else:
            _, i = name
            x = cartan_element(L, n, i - 1, chi)
            if variant == "chi_hbar":
                h = EPS if hbar is None else hbar
                for jj in range(n):
                    x = x - omega_pair(L, n, i - 1, jj,
                                       part="minus").scale(h)
        images.append(x)

    def apply(vec: Sequence) -> UEElement:
        out = UEElement.zero(L, n)
        for c, img in zip(vec, images):
            if c:
                out = out + img.scale(c)
        return out

    apply.images = images
    return apply
