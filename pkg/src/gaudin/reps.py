"""Exact finite-dimensional representations: irreducibles for sl_m built as
cyclic spans inside tensor powers of the defining representation, tensor
products, weight spaces, matrices of enveloping-algebra elements, truncated
highest-weight modules with generic parameter, singular vectors, and the
projection identifying Hom-spaces with weight spaces.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .envelope import UEElement, _block_of, _straighten
from .errors import BudgetExceeded, DepthTooSmall, FactorMismatch, NotDominant
from .liealg import CartanVector, LieAlgebraData

DIM_BUDGET = 2000

Weight = Tuple[Fraction, ...]


def weyl_dim(m: int, lam: Sequence[int]) -> int:
    """Weyl dimension formula for sl_m with fundamental coordinates lam."""
    num, den = 1, 1
    for i in range(m - 1):
        for j in range(i + 1, m):
            num *= sum(lam[i:j]) + (j - i)
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0
    return q


class Irrep:
    """An exact irreducible module V(lambda), basis index 0 = highest weight."""

    def __init__(self, L: LieAlgebraData, lam: Tuple[int, ...]):
        if len(lam) != L.rank or any(c < 0 or not isinstance(c, int) for c in lam):
            raise NotDominant(f"{lam} is not dominant integral for sl_{L.m}")
        self.L = L
        self.highest_weight = lam
        target = weyl_dim(L.m, lam)
        if target > DIM_BUDGET:
            raise BudgetExceeded(f"dim V({lam}) = {target} exceeds {DIM_BUDGET}")

        m = L.m
        # highest-weight vector inside V^(x)N: one antisymmetrized block of
        # size k for each unit of the k-th fundamental coordinate
        blocks: List[int] = []
        for k in range(L.rank, 0, -1):
            blocks.extend([k] * lam[k - 1])
        self.tensor_power = sum(blocks) if blocks else 1
        hw: Dict[Tuple[int, ...], Fraction] = {}
        if not blocks:
            hw[(0,)] = Fraction(1)          # trivial rep inside V, weight-0 fudge
        else:
            from itertools import permutations
            parts: List[Dict[Tuple[int, ...], Fraction]] = []
            for k in blocks:
                blk: Dict[Tuple[int, ...], Fraction] = {}
                for perm in permutations(range(k)):
                    sgn = _perm_sign(perm)
                    blk[tuple(perm)] = Fraction(sgn)
                parts.append(blk)
            acc = [((), Fraction(1))]
            for blk in parts:
                acc = [(idx + idx2, c * c2) for idx, c in acc for idx2, c2 in blk.items()]
            for idx, c in acc:
                hw[idx] = hw.get(idx, Fraction(0)) + c

        if not blocks:
            # the trivial rep: a single formal vector on which g acts by zero
            self.dim = 1
            self.weights = [tuple(Fraction(0) for _ in range(L.rank))]
            self.action = [[{} for _ in range(1)] for _ in range(L.dim)]
            return

        def act(sym: int, state: Dict[Tuple[int, ...], Fraction]):
            mat = L.basis_matrices[sym]
            out: Dict[Tuple[int, ...], Fraction] = {}
            for idx, c in state.items():
                for pos in range(len(idx)):
                    col = idx[pos]
                    for row in range(m):
                        v = mat[row][col]
                        if v:
                            nidx = idx[:pos] + (row,) + idx[pos + 1:]
                            w = out.get(nidx, Fraction(0)) + c * v
                            if w:
                                out[nidx] = w
                            elif nidx in out:
                                del out[nidx]
            return out

        # cyclic span under the simple lowering operators, kept in RREF
        simple_f = [r.f_index for r in L.pos_roots if r.height == 1]
        basis_red: List[Tuple[Tuple[int, ...], Dict[Tuple[int, ...], Fraction]]] = []
        raw_basis: List[Dict[Tuple[int, ...], Fraction]] = []

        def reduce_vec(vec):
            vec = dict(vec)
            for piv, b in basis_red:
                c = vec.get(piv)
                if c:
                    for k2, v2 in b.items():
                        w = vec.get(k2, Fraction(0)) - c * v2
                        if w:
                            vec[k2] = w
                        elif k2 in vec:
                            del vec[k2]
            return vec

        def add_vec(vec) -> bool:
            red = reduce_vec(vec)
            if not red:
                return False
            piv = min(red)
            inv = red[piv]
            red = {k2: v2 / inv for k2, v2 in red.items()}
            for i, (p2, b2) in enumerate(basis_red):
                c = b2.get(piv)
                if c:
                    nb = dict(b2)
                    for k2, v2 in red.items():
                        w = nb.get(k2, Fraction(0)) - c * v2
                        if w:
                            nb[k2] = w
                        elif k2 in nb:
                            del nb[k2]
                    basis_red[i] = (p2, nb)
            basis_red.append((piv, red))
            raw_basis.append(dict(vec))
            return True

        add_vec(hw)
        frontier = [hw]
        while frontier:
            nxt = []
            for vec in frontier:
                for s in simple_f:
                    img = act(s, vec)
                    if img and add_vec(img):
                        nxt.append(img)
            frontier = nxt
            if len(basis_red) > target:
                break
        assert len(basis_red) == target, (
            f"cyclic span gave {len(basis_red)}, Weyl formula {target}")
        self.dim = target

        # order: hw first, then by generation order (raw_basis order)
        order = sorted(range(target), key=lambda i: 0 if raw_basis[i] is hw else 1)
        vectors = [raw_basis[i] for i in range(target)]

        def coords(vec) -> List[Fraction]:
            vec = dict(vec)
            out = [Fraction(0)] * target
            # basis_red rows are an RREF basis of the same space
            for i, (piv, b) in enumerate(basis_red):
                c = vec.get(piv, Fraction(0))
                out[i] = c
                if c:
                    for k2, v2 in b.items():
                        w = vec.get(k2, Fraction(0)) - c * v2
                        if w:
                            vec[k2] = w
                        elif k2 in vec:
                            del vec[k2]
            assert not vec, "vector outside the cyclic span"
            return out

        # change of basis: express raw basis in RREF coordinates, invert
        from .linalg import mat_inverse, mat_mul
        P = [coords(v) for v in vectors]          # raw in terms of RREF rows
        Pinv = mat_inverse([list(col) for col in zip(*P)])

        self.action = []
        for sym in range(L.dim):
            cols: List[Dict[int, Fraction]] = []
            for j in range(target):
                img = act(sym, vectors[j])
                cr = coords(img)                   # RREF coordinates
                raw_coords = [sum(Pinv[i][k] * cr[k] for k in range(target))
                              for i in range(target)]
                cols.append({i: c for i, c in enumerate(raw_coords) if c})
            self.action.append(cols)

        self.weights = []
        for j in range(target):
            w = []
            for kk, s in enumerate(L.h_indices):
                col = self.action[s][j]
                w.append(col.get(j, Fraction(0)))
            self.weights.append(tuple(w))

    def apply(self, sym: int, j: int) -> Dict[int, Fraction]:
        """Column j of the action of basis element sym."""
        return self.action[sym][j]

    def __repr__(self):
        return f"Irrep(sl_{self.L.m}, {self.highest_weight}, dim={self.dim})"


def _perm_sign(perm) -> int:
    sgn = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sgn = -sgn
    return sgn


@lru_cache(maxsize=None)
def build_irrep(L: LieAlgebraData, lam: Tuple[int, ...]) -> Irrep:
    return Irrep(L, lam)


class TruncatedVerma:
    """The highest-weight module M(theta) cut off at a finite depth.

    Basis: PBW monomials in the negative root vectors of total degree <= depth
    applied to the cyclic vector (index 0).  Lowering operators are exact on
    all rows except the boundary depth, where images are truncated away.
    """

    def __init__(self, L: LieAlgebraData, theta_on_h: Tuple[Fraction, ...], depth: int):
        self.L = L
        self.theta_on_h = tuple(Fraction(c) for c in theta_on_h)
        self.depth = depth

        # monomials: sorted tuples of f-symbols (PBW order within the f-block)
        monos: List[Tuple[int, ...]] = [()]
        layer: List[Tuple[int, ...]] = [()]
        for _ in range(depth):
            nxt = []
            for mword in layer:
                start = mword[-1] if mword else 0
                for s in range(start, L.n_pos):
                    nxt.append(mword + (s,))
            monos.extend(nxt)
            layer = nxt
        self.basis = monos
        self.index = {w: i for i, w in enumerate(monos)}
        self.dim = len(monos)
        if self.dim > DIM_BUDGET:
            raise BudgetExceeded(f"truncated module dimension {self.dim}")

        root_of_f = {}
        for r in L.pos_roots:
            root_of_f[r.f_index] = r.on_h
        self._theta_of = {s: sum(self.theta_on_h[k] * v for k, v in enumerate(
            _on_h_of_cartan_sym(L, s))) for s in L.h_indices}
        self.weight_offsets: List[Weight] = []
        for w in monos:
            off = [Fraction(0)] * L.rank
            for s in w:
                for k in range(L.rank):
                    off[k] -= root_of_f[s][k]
            self.weight_offsets.append(tuple(off))
        self.highest_weight = None  # not an integral weight; see theta_on_h

        self.action: List[List[Dict[int, Fraction]]] = []
        for sym in range(L.dim):
            cols = []
            for w in monos:
                cols.append(self._act_word(((0, sym),) + tuple((0, s) for s in w)))
            self.action.append(cols)

        self.weights = [tuple(self.theta_on_h[k] + off[k] for k in range(L.rank))
                        for off in self.weight_offsets]

    def _act_word(self, word) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for w2, c in _straighten(self.L, word, False).items():
            syms = [s for _, s in w2]
            blocks = [_block_of(self.L, s) for s in syms]
            if "e" in blocks:
                continue                     # e's reach the cyclic vector first
            coeff = Fraction(c)
            fpart = []
            for s, b in zip(syms, blocks):
                if b == "h":
                    coeff *= self._theta_of[s]
                else:
                    fpart.append(s)
            key = tuple(fpart)
            if len(key) > self.depth:
                continue                     # truncated (untrusted boundary)
            i = self.index[key]
            v = out.get(i, Fraction(0)) + coeff
            if v:
                out[i] = v
            elif i in out:
                del out[i]
        return out

    def apply(self, sym: int, j: int) -> Dict[int, Fraction]:
        return self.action[sym][j]

    def trusted(self, j: int) -> bool:
        return len(self.basis[j]) < self.depth

    def shapovalov_gram(self, indices: Sequence[int]) -> List[List[Fraction]]:
        """Gram matrix of the pairing with e and f mutually adjoint, on the
        given basis rows (all of one weight)."""
        n = len(indices)
        g = [[Fraction(0)] * n for _ in range(n)]
        for a in range(n):
            ia = indices[a]
            # sigma(monomial) = reversed word with f -> e
            sig = tuple((0, _e_of_f(self.L, s)) for s in reversed(self.basis[ia]))
            for b in range(n):
                ib = indices[b]
                state = {ib: Fraction(1)}
                for (_, sym) in reversed(sig):
                    nstate: Dict[int, Fraction] = {}
                    for j, c in state.items():
                        for i, v in self.apply(sym, j).items():
                            w = nstate.get(i, Fraction(0)) + c * v
                            if w:
                                nstate[i] = w
                            elif i in nstate:
                                del nstate[i]
                    state = nstate
                g[a][b] = state.get(0, Fraction(0))
        return g

    def __repr__(self):
        return f"TruncatedVerma(sl_{self.L.m}, theta={self.theta_on_h}, depth={self.depth})"


def _on_h_of_cartan_sym(L: LieAlgebraData, s: int):
    """Values of the functional B(., h_k)?  No: the weight reading of the
    basis Cartan element h_a acting on a highest-weight vector of functional
    theta is theta(h_a); this helper returns the coordinates of h_a in the
    h-basis (a delta vector)."""
    k = list(L.h_indices).index(s)
    return tuple(Fraction(1) if t == k else Fraction(0) for t in range(L.rank))


def _e_of_f(L: LieAlgebraData, f_sym: int) -> int:
    for r in L.pos_roots:
        if r.f_index == f_sym:
            return r.e_index
    raise KeyError(f_sym)


def weight_height(L: LieAlgebraData, lam: Sequence[int]) -> int:
    """Number of simple lowering steps from the top to the bottom of V(lam):
    the sum of simple-root coefficients of lam - w0(lam)."""
    a = [Fraction(c) for c in lam]
    sym = [x + y for x, y in zip(a, reversed(a))]     # lam - w0(lam) coords
    # solve Cartan-matrix system A c = sym for type A
    from .linalg import solve
    r = L.rank
    A = [[Fraction(2) if i == j else (Fraction(-1) if abs(i - j) == 1 else Fraction(0))
          for j in range(r)] for i in range(r)]
    c = solve(A, sym)
    total = sum(c)
    assert total.denominator == 1
    return int(total)


def default_depth(factors_hw: Sequence[Tuple[int, ...]], L: LieAlgebraData) -> int:
    """Sum over the finite factors of the weight height, plus 2."""
    return sum(weight_height(L, lam) for lam in factors_hw) + 2


class TensorRep:
    """A tensor product of exact modules (optionally one leading truncated
    highest-weight factor); basis indices are tuples of factor indices."""

    def __init__(self, factors: Sequence):
        self.factors = list(factors)
        self.L = factors[0].L
        self.dims = [f.dim for f in factors]
        self.dim = 1
        for d in self.dims:
            self.dim *= d
        if self.dim > DIM_BUDGET:
            raise BudgetExceeded(f"tensor dimension {self.dim}")
        self.has_verma = any(isinstance(f, TruncatedVerma) for f in factors)
        if self.has_verma and not isinstance(factors[0], TruncatedVerma):
            raise ValueError("the truncated factor must come first")

        self.basis = []
        import itertools
        self.basis = list(itertools.product(*[range(d) for d in self.dims]))
        self.index = {b: i for i, b in enumerate(self.basis)}

    def weight_offset(self, idx: Tuple[int, ...]) -> Weight:
        """Weight relative to theta (the Verma parameter) if present, else the
        honest weight: values on h_1..h_r."""
        out = [Fraction(0)] * self.L.rank
        for f, j in zip(self.factors, idx):
            w = f.weight_offsets[j] if isinstance(f, TruncatedVerma) else f.weights[j]
            for k in range(self.L.rank):
                out[k] += w[k]
        return tuple(out)

    def weight_spaces(self) -> Dict[Weight, List[int]]:
        out: Dict[Weight, List[int]] = {}
        for i, idx in enumerate(self.basis):
            out.setdefault(self.weight_offset(idx), []).append(i)
        return out

    def apply_letter(self, factor: int, sym: int, state: Dict[int, Fraction]):
        out: Dict[int, Fraction] = {}
        for i, c in state.items():
            idx = self.basis[i]
            for r, v in self.factors[factor].apply(sym, idx[factor]).items():
                nidx = idx[:factor] + (r,) + idx[factor + 1:]
                ni = self.index[nidx]
                w = out.get(ni, Fraction(0)) + c * v
                if w:
                    out[ni] = w
                elif ni in out:
                    del out[ni]
        return out

    def apply_element(self, x: UEElement, state: Dict[int, Fraction]):
        if x.n != len(self.factors):
            raise FactorMismatch(f"{x.n} factors vs {len(self.factors)}")
        out: Dict[int, Fraction] = {}
        for w, c in x.terms.items():
            st = dict(state)
            for (f, s) in reversed(w):
                st = self.apply_letter(f, s, st)
                if not st:
                    break
            for i, v in st.items():
                t = out.get(i, Fraction(0)) + c * v
                if t:
                    out[i] = t
                elif i in out:
                    del out[i]
        return out


def matrix_of(x: UEElement, V: TensorRep) -> List[List[Fraction]]:
    """Exact matrix of an enveloping-algebra element (column-major assembly)."""
    cols = []
    for j in range(V.dim):
        img = V.apply_element(x, {j: Fraction(1)})
        cols.append(img)
    return [[cols[j].get(i, Fraction(0)) for j in range(V.dim)] for i in range(V.dim)]


def matrix_on_subspace(x: UEElement, V: TensorRep, indices: Sequence[int],
                       basis_vectors: Optional[Sequence[Dict[int, Fraction]]] = None):
    """Matrix of x on the span of the given basis vectors (coordinates over
    the listed ambient indices); defaults to the coordinate subspace."""
    from .linalg import rref, solve
    if basis_vectors is None:
        basis_vectors = [{i: Fraction(1)} for i in indices]
    cols = []
    amb = list(indices)
    rows = [[v.get(i, Fraction(0)) for i in amb] for v in basis_vectors]
    for v in basis_vectors:
        img = V.apply_element(x, dict(v))
        extra = set(img) - set(amb)
        assert not extra, "element does not preserve the subspace"
        rhs = [img.get(i, Fraction(0)) for i in amb]
        sol = solve([list(col) for col in zip(*rows)], rhs)
        assert sol is not None, "image left the span"
        cols.append(sol)
    n = len(basis_vectors)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def singular_vectors(V: TensorRep, mu_offset: Weight) -> List[Dict[int, Fraction]]:
    """Basis of the joint kernel of the simple raising operators on the
    weight space at the given offset (offset from theta when a truncated
    factor is present)."""
    L = V.L
    spaces = V.weight_spaces()
    idxs = spaces.get(tuple(Fraction(c) for c in mu_offset), [])
    if not idxs:
        return []
    if V.has_verma:
        M: TruncatedVerma = V.factors[0]
        for i in idxs:
            if not M.trusted(V.basis[i][0]):
                raise DepthTooSmall(
                    "weight space touches the truncation boundary")
    simple_e = [r.e_index for r in L.pos_roots if r.height == 1]
    rows = []
    for s in simple_e:
        # matrix of the raising operator from this weight space to the next
        target: Dict[int, int] = {}
        cols = []
        for i in idxs:
            img: Dict[int, Fraction] = {}
            state = {i: Fraction(1)}
            for f in range(len(V.factors)):
                part = V.apply_letter(f, s, state)
                for k, v in part.items():
                    w = img.get(k, Fraction(0)) + v
                    if w:
                        img[k] = w
                    elif k in img:
                        del img[k]
            for k in img:
                target.setdefault(k, len(target))
            cols.append(img)
        mat = [[Fraction(0)] * len(idxs) for _ in range(len(target))]
        for j, img in enumerate(cols):
            for k, v in img.items():
                mat[target[k]][j] = v
        rows.extend(mat)
    from .linalg import nullspace
    if not rows:
        kernel = [[Fraction(1) if a == b else Fraction(0) for a in range(len(idxs))]
                  for b in range(len(idxs))]
    else:
        kernel = nullspace(rows, len(idxs))
    return [{idxs[j]: c for j, c in enumerate(vec) if c} for vec in kernel]


def pi_theta(V: TensorRep, vec: Dict[int, Fraction]) -> Dict[Tuple[int, ...], Fraction]:
    """Project a vector of M(theta) (x) V(lambdas) onto its cyclic-vector
    component, yielding a vector of the finite tensor factor."""
    assert V.has_verma
    out: Dict[Tuple[int, ...], Fraction] = {}
    for i, c in vec.items():
        idx = V.basis[i]
        if idx[0] == 0:                      # the cyclic vector of the Verma factor
            out[idx[1:]] = c
    return out


def is_generic_theta(L: LieAlgebraData, theta_on_h: Sequence[Fraction], bound: int) -> bool:
    """No <theta + rho, coroot> is an integer in [-bound, bound]."""
    for r in L.pos_roots:
        # <theta, alpha^vee> for alpha = eps_i - eps_j is theta(h_i + ... + h_{j-1})
        val = sum(Fraction(theta_on_h[k]) + L.rho_on_h[k]
                  for k in range(r.i, r.j))
        if val.denominator == 1 and -bound <= val <= bound:
            return False
    return True


@lru_cache(maxsize=None)
def standard_form(rep: Irrep) -> Tuple[Tuple[Fraction, ...], ...]:
    """Gram matrix of the contravariant form on an irreducible module:
    the unique symmetric form with e and f adjoint to each other, Cartan
    elements self-adjoint, and unit norm on the highest-weight vector.
    Solved as a linear system; positive definite on these real bases."""
    L, d = rep.L, rep.dim
    # unknowns: entries G[a][b]; equations per simple-root pair (e_s, f_s):
    # G M(e) - M(f)^T G = 0, plus symmetry and normalization G[0][0] = 1.
    nvar = d * d
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []

    def var(a, b):
        return a * d + b

    simple = [r for r in L.pos_roots if r.height == 1]
    for r in simple:
        e_cols = [rep.apply(r.e_index, j) for j in range(d)]
        f_cols = [rep.apply(r.f_index, j) for j in range(d)]
        for a in range(d):
            for b in range(d):
                row = [Fraction(0)] * nvar
                for c, v in e_cols[b].items():      # (G M(e))_{ab}
                    row[var(a, c)] += v
                for c, v in f_cols[a].items():      # (M(f)^T G)_{ab}
                    row[var(c, b)] -= v
                if any(row):
                    rows.append(row)
                    rhs.append(Fraction(0))
    for a in range(d):
        for b in range(a + 1, d):
            row = [Fraction(0)] * nvar
            row[var(a, b)] = Fraction(1)
            row[var(b, a)] = Fraction(-1)
            rows.append(row)
            rhs.append(Fraction(0))
    row = [Fraction(0)] * nvar
    row[var(0, 0)] = Fraction(1)
    rows.append(row)
    rhs.append(Fraction(1))

    from .linalg import solve
    sol = solve(rows, rhs)
    assert sol is not None, "contravariant form system inconsistent"
    return tuple(tuple(sol[var(a, b)] for b in range(d)) for a in range(d))


def tensor_standard_form(V: TensorRep) -> List[List[Fraction]]:
    """Kronecker product of the factor forms, in the tensor basis order."""
    forms = [standard_form(f) for f in V.factors]
    out = []
    for bi in V.basis:
        row = []
        for bj in V.basis:
            v = Fraction(1)
            for k in range(len(V.factors)):
                v *= forms[k][bi[k]][bj[k]]
                if not v:
                    break
            row.append(v)
        out.append(row)
    return out
