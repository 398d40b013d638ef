"""Quadratic Hamiltonians of the Gaudin models and their row-reduced spans.

Four families of commuting quadratic elements in U(g)^{(x)n}: the homogeneous
H_i, the trigonometric H^trig_{i,theta}, the inhomogeneous H_{i,chi} with
the dynamical elements G_k, and the one-parameter interpolating family.  The
quadratic-filtered span of each model is computed from holonomy data (the
gamma-image of the curve span plus the Casimirs), for interior and boundary
moduli points alike, with an exact Grassmannian limit for the parameter
going to zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import EPS, RatFunc, Rational, rat
from .envelope import (UEElement, cartan_element, casimir_element, commutator,
                       delta_embed, iota0_reduce, omega_pair, psi_reduce)
from .errors import (ChartNotFound, CoincidentPoints, NonRegularChi, RankDrop,
                     ZeroPoint)
from .liealg import CartanVector, LieAlgebraData, is_regular
from .linalg import rank as mat_rank
from .linalg import nullspace, rref
from .moduli import (ModuliPoint, PlanarBinaryForest, chart_membership,
                     interior_forest)
from .holonomy import HolonomyAlgebra, gamma_map, q_of_curve, q_of_points

KINDS = ("homogeneous", "trigonometric", "inhomogeneous", "dynamical",
         "family")

# product convention for the root-space part of the dynamical elements:
# x_alpha x^alpha contributes (e f + f e)/2 per positive root (the symmetric
# choice is the one that commutes with the inhomogeneous Hamiltonians)
DYNAMICAL_MODE = "sym"


@dataclass
class HamiltonianSet:
    kind: str
    L: LieAlgebraData
    n: int
    elements: List[UEElement]
    params: Dict = field(default_factory=dict)

    def pairwise_commute(self) -> bool:
        els = self.elements
        return all(commutator(els[a], els[b]).is_zero()
                   for a in range(len(els)) for b in range(a + 1, len(els)))


def _check_distinct(z: Sequence) -> None:
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            if z[i] == z[j]:
                raise CoincidentPoints(f"z_{i + 1} == z_{j + 1}")


def homogeneous_elements(L: LieAlgebraData, z: Sequence[Rational]
                         ) -> List[UEElement]:
    z = [rat(x) for x in z]
    _check_distinct(z)
    n = len(z)
    out = []
    for i in range(n):
        h = UEElement.zero(L, n)
        for j in range(n):
            if j != i:
                h = h + omega_pair(L, n, i, j).scale(1 / (z[i] - z[j]))
        out.append(h)
    return out


def trig_elements(L: LieAlgebraData, z: Sequence, theta: CartanVector,
                  scalar=None) -> List[UEElement]:
    """theta^(i)/z_i + sum_{j != i} Omega^(ij)/(z_i - z_j)
    - sum_j OmegaMinus^(ij)/z_i, with OmegaMinus^(ii) the one-factor
    product omega_-^(i)."""
    n = len(z)
    for x in z:
        if not x:
            raise ZeroPoint("trigonometric points must be nonzero")
    _check_distinct(z)
    out = []
    for i in range(n):
        h = cartan_element(L, n, i, theta).scale(1 / z[i])
        for j in range(n):
            if j != i:
                h = h + omega_pair(L, n, i, j).scale(1 / (z[i] - z[j]))
            h = h - omega_pair(L, n, i, j, part="minus").scale(1 / z[i])
        out.append(h)
    return out


def inhomogeneous_elements(L: LieAlgebraData, z: Sequence[Rational],
                           chi: CartanVector) -> List[UEElement]:
    z = [rat(x) for x in z]
    _check_distinct(z)
    n = len(z)
    out = []
    for i in range(n):
        h = cartan_element(L, n, i, chi)
        for j in range(n):
            if j != i:
                h = h + omega_pair(L, n, i, j).scale(1 / (z[i] - z[j]))
        out.append(h)
    return out


def dynamical_elements(L: LieAlgebraData, z: Sequence[Rational],
                       chi: CartanVector, mode: str = DYNAMICAL_MODE
                       ) -> List[UEElement]:
    """G_k = sum_{alpha > 0} (alpha(h_k)/alpha(chi)) Delta^n(x_alpha x^alpha)
    + sum_j z_j h_k^(j), one element per simple Cartan direction h_k."""
    z = [rat(x) for x in z]
    n = len(z)
    if not is_regular(chi, L):
        raise NonRegularChi("dynamical Hamiltonians need a regular chi")
    full = list(range(n))
    out = []
    for k in range(L.rank):
        g = UEElement.zero(L, n)
        for root in L.pos_roots:
            num = root.on_h[k]
            if not num:
                continue
            e = UEElement.letter(L, 1, 0, root.e_index)
            f = UEElement.letter(L, 1, 0, root.f_index)
            if mode == "ef":
                pair = e * f
            elif mode == "fe":
                pair = f * e
            else:
                pair = (e * f + f * e).scale(Fraction(1, 2))
            g = g + delta_embed([full], pair, n).scale(
                num / L.root_value(root, chi))
        ek = CartanVector(tuple(Fraction(1) if t == k else Fraction(0)
                                for t in range(L.rank)))
        for j in range(n):
            if z[j]:
                g = g + cartan_element(L, n, j, ek).scale(z[j])
        out.append(g)
    return out


def family_elements(L: LieAlgebraData, z: Sequence[Rational],
                    chi: CartanVector) -> List[UEElement]:
    """The trigonometric elements at points 1/(1 - eps*z_i) with parameter
    eps^{-1}*chi, over the rational-function scalar ring.  This matches the
    gamma-image of the deformed curve span exactly, and its eps -> 0 limit
    is the inhomogeneous span at z."""
    z = [rat(x) for x in z]
    _check_distinct(z)
    w = [1 / (RatFunc.const(1) - EPS * RatFunc.const(x)) for x in z]
    theta = CartanVector(tuple(RatFunc.const(c) / EPS for c in chi.coords),
                         chi.role)
    return trig_elements(L, w, theta)


def hamiltonians(kind: str, L: LieAlgebraData, z: Sequence,
                 theta: Optional[CartanVector] = None,
                 chi: Optional[CartanVector] = None,
                 check: bool = True) -> HamiltonianSet:
    n = len(z)
    if kind == "homogeneous":
        els = homogeneous_elements(L, z)
        if check:
            total = els[0]
            for h in els[1:]:
                total = total + h
            assert total.is_zero()
    elif kind == "trigonometric":
        els = trig_elements(L, [rat(x) for x in z], theta)
        if check:
            hom = homogeneous_elements(L, [Fraction(0)] + [rat(x) for x in z])
            for i, h in enumerate(els):
                assert (psi_reduce(hom[i + 1], theta) - h).is_zero()
    elif kind == "inhomogeneous":
        els = inhomogeneous_elements(L, z, chi)
    elif kind == "dynamical":
        els = inhomogeneous_elements(L, z, chi) + dynamical_elements(L, z, chi)
    elif kind == "family":
        els = family_elements(L, z, chi)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    hs = HamiltonianSet(kind, L, n, els,
                        {"z": tuple(z), "theta": theta, "chi": chi})
    if check:
        assert hs.pairwise_commute()
    return hs


# ---------------------------------------------------------------------------
# quadratic spans
# ---------------------------------------------------------------------------

def _as_ratfunc_rows(rows):
    return [[RatFunc.coerce(c) for c in row] for row in rows]


class QuadraticSpan:
    """Row space of quadratic-filtered elements, in PBW-monomial coordinates.

    Stored as an RREF matrix over a fixed, canonically ordered set of
    monomial words; two spans over different word sets are compared after
    padding to the union.
    """

    def __init__(self, L: LieAlgebraData, n: int,
                 elements: Sequence[UEElement]):
        self.L, self.n = L, n
        words = set()
        for x in elements:
            words.update(x.terms)
        self.words: Tuple = tuple(sorted(words, key=lambda w: (len(w), w)))
        self.ratfunc = any(isinstance(c, RatFunc) for x in elements
                           for c in x.terms.values())
        idx = {w: k for k, w in enumerate(self.words)}
        zero = RatFunc.const(0) if self.ratfunc else Fraction(0)
        raw = []
        for x in elements:
            row = [zero] * len(self.words)
            for w, c in x.terms.items():
                row[idx[w]] = RatFunc.coerce(c) if self.ratfunc else c
            raw.append(row)
        self.rows, self.pivots = rref(raw)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _padded(self, words: Tuple) -> List[List]:
        idx = {w: k for k, w in enumerate(words)}
        zero = RatFunc.const(0) if self.ratfunc else Fraction(0)
        out = []
        for row in self.rows:
            new = [zero] * len(words)
            for w, c in zip(self.words, row):
                new[idx[w]] = c
            out.append(new)
        return out

    def contains(self, x: UEElement) -> bool:
        words = tuple(sorted(set(self.words) | set(x.terms),
                             key=lambda w: (len(w), w)))
        rows = self._padded(words)
        idx = {w: k for k, w in enumerate(words)}
        zero = RatFunc.const(0) if self.ratfunc else Fraction(0)
        v = [zero] * len(words)
        for w, c in x.terms.items():
            v[idx[w]] = RatFunc.coerce(c) if self.ratfunc else c
        return mat_rank(rows + [v]) == len(rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuadraticSpan):
            return NotImplemented
        if self.dim != other.dim:
            return False
        words = tuple(sorted(set(self.words) | set(other.words),
                             key=lambda w: (len(w), w)))
        a, _ = rref(self._padded(words))
        b, _ = rref(other._padded(words))
        return a == b


def span_of(L: LieAlgebraData, n: int, elements: Sequence[UEElement]
            ) -> QuadraticSpan:
    return QuadraticSpan(L, n, elements)


def interior_span(kind: str, L: LieAlgebraData, z: Sequence,
                  theta: Optional[CartanVector] = None,
                  chi: Optional[CartanVector] = None,
                  check: bool = True) -> QuadraticSpan:
    """Span of the model's Hamiltonians together with the Casimirs."""
    hs = hamiltonians(kind, L, z, theta=theta, chi=chi, check=check)
    els = list(hs.elements)
    for i in range(hs.n):
        els.append(casimir_element(L, hs.n, i))
    return QuadraticSpan(L, hs.n, els)


_KIND_DATA = {
    # kind -> (holonomy family, gamma variant, extra distinguished label)
    "homogeneous": ("s_n", "plain", 0),
    "trigonometric": ("s_n", "theta", 1),
    "inhomogeneous": ("r_n", "chi", 0),
    "family": ("rtilde_n", "chi_hbar", 0),
}


def forest_for(point: ModuliPoint) -> PlanarBinaryForest:
    """A forest chart compatible with the point's stratum: one tree per
    petal (everything in one tree for the projective-line space), nested
    left-to-right caterpillars inside each collision class."""
    s = point.stratum
    collisions = s["collisions"]
    petals = s.get("petals", [list(range(1, point.n + 1))])
    cls_of = {}
    for cls in collisions:
        for i in cls:
            cls_of[i] = tuple(sorted(cls))

    def caterpillar(items):
        t = items[0]
        for x in items[1:]:
            t = (t, x)
        return t

    trees = []
    for petal in sorted(petals, key=min):
        blocks = []
        seen = set()
        for i in sorted(petal):
            cls = cls_of.get(i, (i,))
            if cls in seen:
                continue
            seen.add(cls)
            blocks.append(caterpillar(list(cls)) if len(cls) > 1 else i)
        trees.append(caterpillar(blocks))
    return PlanarBinaryForest(tuple(trees))


def quad_span(L: LieAlgebraData, point: ModuliPoint, kind: str,
              theta: Optional[CartanVector] = None,
              chi: Optional[CartanVector] = None,
              forest: Optional[PlanarBinaryForest] = None) -> QuadraticSpan:
    """Quadratic-filtered span of the model attached to a moduli point,
    interior or boundary: the gamma-image of the curve span in the forest
    chart, plus the span of the Casimirs."""
    fam, variant, extra = _KIND_DATA[kind]
    labels = point.n
    n = labels - extra
    if forest is None:
        forest = forest_for(point)
    if fam == "rtilde_n":
        H = HolonomyAlgebra(fam, labels, hbar=point.eps)
    else:
        H = HolonomyAlgebra(fam, labels)
    ok, vals = chart_membership(point, forest)
    if not ok:
        raise ChartNotFound("point does not lie in the derived forest chart")
    Q = q_of_curve(H, forest, vals)
    g = gamma_map(L, H, variant, theta=theta, chi=chi, hbar=point.eps)
    els = [g(row) for row in Q.rows]
    for i in range(n):
        els.append(casimir_element(L, n, i))
    return QuadraticSpan(L, n, els)


# ---------------------------------------------------------------------------
# exact limits
# ---------------------------------------------------------------------------

def _eps_shift(f: RatFunc, k: int) -> RatFunc:
    out = f
    for _ in range(k):
        out = out * EPS
    for _ in range(-k):
        out = out / EPS
    return out


def span_limit_eps0(span: QuadraticSpan) -> QuadraticSpan:
    """Exact Grassmannian limit at parameter 0: rescale each row by the
    parameter power making its leading Laurent row nonzero, evaluate, and
    absorb any rank drop by re-normalizing kernel combinations."""
    assert span.ratfunc
    rows = [list(r) for r in span.rows]
    target = len(rows)
    while True:
        norm = []
        for row in rows:
            v = min((c.valuation() for c in row if not c.is_zero()),
                    default=0)
            norm.append([_eps_shift(c, -v) for c in row])
        limit = [[Fraction(c(0)) for c in row] for row in norm]
        red, piv = rref(limit)
        if len(red) == target:
            out = QuadraticSpan.__new__(QuadraticSpan)
            out.L, out.n, out.words = span.L, span.n, span.words
            out.ratfunc = False
            out.rows, out.pivots = red, piv
            return out
        # left kernel of the evaluated rows: combinations vanishing at 0
        combos = nullspace([[limit[r][c] for r in range(len(limit))]
                            for c in range(len(span.words))], len(limit))
        if not combos:
            raise RankDrop("no combination to renormalize")
        replaced = False
        for combo in combos:
            lead = max(k for k, c in enumerate(combo) if c)
            new = [RatFunc.const(0)] * len(span.words)
            for k, c in enumerate(combo):
                if c:
                    for t in range(len(new)):
                        new[t] = new[t] + norm[k][t] * c
            if any(not c.is_zero() for c in new):
                rows[lead] = new
                replaced = True
                break
        if not replaced:
            raise RankDrop("degenerate family")


def iota0_span(L: LieAlgebraData, z0: Rational, z: Sequence[Rational],
               check: bool = True) -> QuadraticSpan:
    """Image of the homogeneous quadratic span at (z0, z) under elimination
    of the distinguished factor; equals the homogeneous span at the
    inverted points 1/(z_i - z0)."""
    z0 = rat(z0)
    z = [rat(x) for x in z]
    n = len(z)
    els = homogeneous_elements(L, [z0] + z)
    reduced = [iota0_reduce(x) for x in els]
    for i in range(n + 1):
        reduced.append(iota0_reduce(casimir_element(L, n + 1, i)))
    out = QuadraticSpan(L, n, reduced)
    if check:
        w = [1 / (x - z0) for x in z]
        ref = interior_span("homogeneous", L, w, check=False)
        assert out == ref
    return out
