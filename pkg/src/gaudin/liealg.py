"""Structure data for sl_m (type A): Chevalley basis from matrix units,
bracket table, trace form of the defining representation, triangular
decomposition, Casimir tensor with its split, rho, and regularity tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .errors import BudgetExceeded
from .linalg import mat_inverse

DEFAULT_RANK_CAP = 5  # largest m in sl_m at desk scale


@dataclass(frozen=True)
class CartanVector:
    """An element of the Cartan subalgebra, coordinates in the h-basis.

    Used for theta (trigonometric parameter), chi (inhomogeneous shift),
    and for weights identified with Cartan elements through the form.
    """
    coords: Tuple
    role: str = "chi"

    def __iter__(self):
        return iter(self.coords)

    def scale(self, c) -> "CartanVector":
        return CartanVector(tuple(c * x for x in self.coords), self.role)


@dataclass(frozen=True)
class PositiveRoot:
    i: int           # alpha = eps_i - eps_j, i < j (matrix-unit indices)
    j: int
    height: int      # j - i
    e_index: int     # basis index of the root vector E_ij
    f_index: int     # basis index of E_ji
    on_h: Tuple[Fraction, ...]   # values alpha(h_1), ..., alpha(h_r)


@dataclass(frozen=True)
class CasimirSplit:
    """The invariant two-tensor Omega = sum_a x_a (x) x^a and its triangular
    pieces, each stored as a list of (left index, right index, coefficient)."""
    omega_plus: Tuple[Tuple[int, int, Fraction], ...]   # in n+ (x) n-
    omega_zero: Tuple[Tuple[int, int, Fraction], ...]   # in h (x) h
    omega_minus: Tuple[Tuple[int, int, Fraction], ...]  # in n- (x) n+
    omega_full: Tuple[Tuple[int, int, Fraction], ...]


class LieAlgebraData:
    """Validated structure data for sl_m.

    Basis order is the PBW order n- < h < n+: the f-block (by decreasing
    root height), then h_1..h_r, then the e-block (by increasing height).
    The invariant form is the trace form of the defining representation.
    """

    def __init__(self, m: int, validate: bool = True):
        self.m = m
        self.rank = m - 1
        self.dim = m * m - 1

        # positive roots alpha_{ij} = eps_i - eps_j, i < j, sorted by height
        pairs = sorted(((i, j) for i in range(m) for j in range(i + 1, m)),
                       key=lambda p: (p[1] - p[0], p[0]))
        self.n_pos = len(pairs)

        # basis matrices (m x m, Fraction entries)
        def unit(i, j):
            return tuple(tuple(Fraction(1) if (a, b) == (i, j) else Fraction(0)
                               for b in range(m)) for a in range(m))

        mats: List[Tuple] = []
        names: List[str] = []
        for (i, j) in reversed(pairs):                    # f-block
            mats.append(unit(j, i))
            names.append(f"f[{i + 1}{j + 1}]")
        for k in range(self.rank):                        # h-block
            h = [[Fraction(0)] * m for _ in range(m)]
            h[k][k] = Fraction(1)
            h[k + 1][k + 1] = Fraction(-1)
            mats.append(tuple(tuple(row) for row in h))
            names.append(f"h[{k + 1}]")
        for (i, j) in pairs:                              # e-block
            mats.append(unit(i, j))
            names.append(f"e[{i + 1}{j + 1}]")
        self.basis_matrices = tuple(mats)
        self.basis_names = tuple(names)
        self.f_indices = tuple(range(self.n_pos))
        self.h_indices = tuple(range(self.n_pos, self.n_pos + self.rank))
        self.e_indices = tuple(range(self.n_pos + self.rank, self.dim))

        self.pos_roots: List[PositiveRoot] = []
        for k, (i, j) in enumerate(pairs):
            e_idx = self.n_pos + self.rank + k
            # the f-block stores reversed(pairs)
            f_idx = pairs[::-1].index((i, j))
            on_h = tuple(Fraction((1 if i == t else 0) - (1 if i == t + 1 else 0)
                                  - (1 if j == t else 0) + (1 if j == t + 1 else 0))
                         for t in range(self.rank))
            self.pos_roots.append(PositiveRoot(i, j, j - i, e_idx, f_idx, on_h))

        # bracket table in the basis
        self._bracket: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for a in range(self.dim):
            for b in range(self.dim):
                comm = _mat_comm(self.basis_matrices[a], self.basis_matrices[b])
                expansion = self._expand(comm)
                if expansion:
                    self._bracket[(a, b)] = expansion

        # trace form
        g = [[_trace_prod(self.basis_matrices[a], self.basis_matrices[b])
              for b in range(self.dim)] for a in range(self.dim)]
        self.gram = tuple(tuple(row) for row in g)
        self.gram_inv = tuple(tuple(row) for row in mat_inverse(g))

        # Cartan-block Gram and inverse (used for weight <-> element passage)
        hi = self.h_indices
        self.gram_h = tuple(tuple(self.gram[a][b] for b in hi) for a in hi)
        self.gram_h_inv = tuple(tuple(row) for row in mat_inverse(self.gram_h))

        self.casimir = self._build_casimir()

        # rho: half sum of positive roots; rho(h_k) = 1 for all k in type A
        self.rho_on_h = tuple(
            sum((r.on_h[k] for r in self.pos_roots), Fraction(0)) / 2
            for k in range(self.rank))
        self.rho = self.cartan_from_weight(self.rho_on_h, role="weight")

        if validate:
            self._validate()

    # -- expansion of an arbitrary traceless matrix in the basis ------------
    def _expand(self, mat) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for r in self.pos_roots:
            c = mat[r.i][r.j]
            if c != 0:
                out[r.e_index] = c
            c = mat[r.j][r.i]
            if c != 0:
                out[r.f_index] = c
        partial = Fraction(0)
        for k in range(self.rank):
            partial += mat[k][k]
            if partial != 0:
                out[self.h_indices[k]] = partial
        return out

    # -- brackets -----------------------------------------------------------
    def bracket(self, a: int, b: int) -> Dict[int, Fraction]:
        return self._bracket.get((a, b), {})

    # -- weights and Cartan elements ----------------------------------------
    def weight_of_cartan(self, v: CartanVector) -> Tuple:
        """Values of the functional B(v, .) on h_1..h_r."""
        return tuple(sum(self.gram_h[k][l] * c for l, c in enumerate(v.coords))
                     for k in range(self.rank))

    def cartan_from_weight(self, on_h: Sequence, role: str = "weight") -> CartanVector:
        """The Cartan element t with B(t, h_k) = on_h[k] (form identification)."""
        coords = tuple(sum(self.gram_h_inv[k][l] * Fraction(on_h[l])
                           for l in range(self.rank)) for k in range(self.rank))
        return CartanVector(coords, role)

    def weight_pairing(self, w1: Sequence, w2: Sequence):
        """(w1, w2) under the form transported to h*, from values on h_k."""
        return sum(self.gram_h_inv[k][l] * w1[k] * w2[l]
                   for k in range(self.rank) for l in range(self.rank))

    def root_value(self, root: PositiveRoot, chi: CartanVector):
        """alpha(chi) for chi = sum c_k h_k."""
        return sum(c * root.on_h[k] for k, c in enumerate(chi.coords))

    # -- Casimir ------------------------------------------------------------
    def _build_casimir(self) -> CasimirSplit:
        plus, minus = [], []
        for r in self.pos_roots:
            # B(e_alpha, f_alpha) = 1, so the pairs are mutually dual
            plus.append((r.e_index, r.f_index, Fraction(1)))
            minus.append((r.f_index, r.e_index, Fraction(1)))
        zero = []
        for a in range(self.rank):
            for b in range(self.rank):
                c = self.gram_h_inv[a][b]
                if c != 0:
                    zero.append((self.h_indices[a], self.h_indices[b], c))
        full = tuple(plus) + tuple(zero) + tuple(minus)
        return CasimirSplit(tuple(plus), tuple(zero), tuple(minus), full)

    # -- validation ---------------------------------------------------------
    def _validate(self):
        d = self.dim
        for a in range(d):
            for b in range(d):
                ab = self.bracket(a, b)
                ba = self.bracket(b, a)
                assert all(ab.get(c, 0) == -ba.get(c, 0)
                           for c in set(ab) | set(ba)), "antisymmetry failed"
                # invariance ([x,y],z) = -(y,[x,z])
                for c in range(d):
                    lhs = sum(coef * self.gram[t][c] for t, coef in ab.items())
                    xz = self.bracket(a, c)
                    rhs = -sum(coef * self.gram[b][t] for t, coef in xz.items())
                    assert lhs == rhs, "form invariance failed"
        for a in range(d):
            for b in range(d):
                for c in range(d):
                    acc: Dict[int, Fraction] = {}
                    for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                        for t, coef in self.bracket(y, z).items():
                            for s, coef2 in self.bracket(x, t).items():
                                acc[s] = acc.get(s, Fraction(0)) + coef * coef2
                    assert all(v == 0 for v in acc.values()), "Jacobi failed"

    def __repr__(self):
        return f"LieAlgebraData(sl_{self.m})"


def _mat_comm(a, b):
    m = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
    ba = [[sum(b[i][k] * a[k][j] for k in range(m)) for j in range(m)] for i in range(m)]
    return [[ab[i][j] - ba[i][j] for j in range(m)] for i in range(m)]


def _trace_prod(a, b):
    m = len(a)
    return sum(a[i][k] * b[k][i] for i in range(m) for k in range(m))


@lru_cache(maxsize=None)
def build_sl(m: int, cap: int = DEFAULT_RANK_CAP) -> LieAlgebraData:
    """Validated structure data for sl_m; m is capped at desk scale."""
    if m < 2:
        raise ValueError("need m >= 2")
    if m > cap:
        raise BudgetExceeded(f"sl_{m} exceeds the configured cap m <= {cap}")
    # exhaustive Jacobi validation is cubic in dim; skip it for the largest m
    return LieAlgebraData(m, validate=(m <= 3))


def is_regular(chi: CartanVector, L: LieAlgebraData) -> bool:
    """True iff alpha(chi) != 0 for every positive root alpha."""
    return all(L.root_value(r, chi) != 0 for r in L.pos_roots)
