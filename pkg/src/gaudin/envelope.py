"""Elements of U(g)^(x)n as factor-indexed PBW words: straightening,
products, commutators, diagonal embeddings, and the reduction maps that
eliminate a distinguished zeroth factor (psi-type and iota-type).

A letter is a pair (factor, basis index); words are tuples of letters in
PBW normal form: sorted by factor, then by the basis order n- < h < n+.
When ``rees`` is set, straightening inside factor 0 inserts one power of
the formal variable eps per bracket (the Rees convention), and scalars
live in RatFunc.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .arith import EPS, RatFunc
from .errors import FactorMismatch, PartitionMismatch
from .liealg import CartanVector, LieAlgebraData

Letter = Tuple[int, int]
Word = Tuple[Letter, ...]


def _is_sorted(word: Word) -> bool:
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def _straighten(alg: LieAlgebraData, word: Word, rees: bool) -> Dict[Word, object]:
    """Express a raw word in PBW normal form; returns word -> coefficient."""
    cache = alg.__dict__.setdefault("_straighten_cache", {})
    key = (word, rees)
    hit = cache.get(key)
    if hit is not None:
        return hit
    # find the first adjacent inversion
    pos = None
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            pos = i
            break
    if pos is None:
        cache[key] = {word: Fraction(1)}
        return cache[key]
    x, y = word[pos], word[pos + 1]
    swapped = word[:pos] + (y, x) + word[pos + 2:]
    out: Dict[Word, object] = {}
    for w, c in _straighten(alg, swapped, rees).items():
        out[w] = out.get(w, 0) + c
    if x[0] == y[0]:          # same factor: xy = yx + [x,y] (eps [x,y] in Rees factor 0)
        hbar = rees and x[0] == 0
        for sym, c in alg.bracket(x[1], y[1]).items():
            corr = word[:pos] + ((x[0], sym),) + word[pos + 2:]
            coeff = c * EPS if hbar else c
            for w, c2 in _straighten(alg, corr, rees).items():
                out[w] = out.get(w, 0) + coeff * c2
    out = {w: c for w, c in out.items() if c}
    cache[key] = out
    return out


class UEElement:
    """A finite scalar combination of PBW-normalized words over n factors."""

    __slots__ = ("alg", "n", "terms", "rees")

    def __init__(self, alg: LieAlgebraData, n: int, terms: Optional[Dict[Word, object]] = None,
                 rees: bool = False, _normalized: bool = False):
        self.alg = alg
        self.n = n
        self.rees = rees
        terms = terms or {}
        if _normalized:
            self.terms = {w: c for w, c in terms.items() if c}
        else:
            acc: Dict[Word, object] = {}
            for w, c in terms.items():
                if not c:
                    continue
                for w2, c2 in _straighten(alg, w, rees).items():
                    v = acc.get(w2, 0) + c * c2
                    if v:
                        acc[w2] = v
                    elif w2 in acc:
                        del acc[w2]
            self.terms = acc

    # -- constructors -------------------------------------------------------
    @staticmethod
    def zero(alg, n, rees=False) -> "UEElement":
        return UEElement(alg, n, {}, rees, _normalized=True)

    @staticmethod
    def one(alg, n, rees=False) -> "UEElement":
        return UEElement(alg, n, {(): Fraction(1)}, rees, _normalized=True)

    @staticmethod
    def letter(alg, n, factor: int, sym: int, rees=False) -> "UEElement":
        return UEElement(alg, n, {((factor, sym),): Fraction(1)}, rees, _normalized=True)

    # -- structure ----------------------------------------------------------
    def filtered_degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def map_coeffs(self, f) -> "UEElement":
        return UEElement(self.alg, self.n, {w: f(c) for w, c in self.terms.items()},
                         self.rees)

    # -- ring operations ----------------------------------------------------
    def _check(self, other: "UEElement"):
        if self.alg is not other.alg or self.n != other.n or self.rees != other.rees:
            raise FactorMismatch("incompatible enveloping-algebra contexts")

    def __add__(self, other: "UEElement") -> "UEElement":
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            v = acc.get(w, 0) + c
            if v:
                acc[w] = v
            elif w in acc:
                del acc[w]
        return UEElement(self.alg, self.n, acc, self.rees, _normalized=True)

    def __neg__(self) -> "UEElement":
        return UEElement(self.alg, self.n, {w: -c for w, c in self.terms.items()},
                         self.rees, _normalized=True)

    def __sub__(self, other: "UEElement") -> "UEElement":
        return self + (-other)

    def scale(self, c) -> "UEElement":
        if not c:
            return UEElement.zero(self.alg, self.n, self.rees)
        return UEElement(self.alg, self.n, {w: c * cf for w, cf in self.terms.items()},
                         self.rees, _normalized=True)

    def __mul__(self, other: "UEElement") -> "UEElement":
        self._check(other)
        acc: Dict[Word, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for w, c3 in _straighten(self.alg, w1 + w2, self.rees).items():
                    v = acc.get(w, 0) + c * c3
                    if v:
                        acc[w] = v
                    elif w in acc:
                        del acc[w]
        return UEElement(self.alg, self.n, acc, self.rees, _normalized=True)

    def __eq__(self, other):
        if not isinstance(other, UEElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("UEElement is unhashable")

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            c = self.terms[w]
            mono = "*".join(f"{self.alg.basis_names[s]}({f})" for f, s in w) or "1"
            bits.append(f"({c})*{mono}")
        return " + ".join(bits)

    def to_json(self) -> List[dict]:
        return [{"word": [[f, self.alg.basis_names[s]] for f, s in w], "coeff": str(c)}
                for w, c in sorted(self.terms.items())]


def pbw_normalize(alg: LieAlgebraData, n: int, raw_terms: Dict[Word, object],
                  rees: bool = False) -> UEElement:
    """PBW normal form of a raw word sum (idempotent on normal forms)."""
    return UEElement(alg, n, raw_terms, rees)


def commutator(a: UEElement, b: UEElement) -> UEElement:
    return a * b - b * a


# ---------------------------------------------------------------------------
# standard elements
# ---------------------------------------------------------------------------

def omega_pair(alg: LieAlgebraData, n: int, i: int, j: int, part: str = "full",
               rees: bool = False) -> UEElement:
    """Omega^(ij) (or its triangular part) inserted in factors i, j.

    For i == j the two-tensor is multiplied inside the single factor,
    giving the Casimir element omega^(i) (or omega_-^(i) etc.).
    """
    tensor = getattr(alg.casimir, f"omega_{part}")
    terms: Dict[Word, object] = {}
    for (a, b, c) in tensor:
        w = ((i, a), (j, b))
        terms[w] = terms.get(w, 0) + c
    return UEElement(alg, n, terms, rees)


def casimir_element(alg: LieAlgebraData, n: int, i: int, rees: bool = False) -> UEElement:
    """omega^(i) = sum_a x_a x^a in factor i."""
    return omega_pair(alg, n, i, i, "full", rees)


def cartan_element(alg: LieAlgebraData, n: int, i: int, v: CartanVector,
                   rees: bool = False) -> UEElement:
    """The Cartan element v inserted in factor i."""
    terms = {((i, alg.h_indices[k]),): c for k, c in enumerate(v.coords) if c}
    return UEElement(alg, n, terms, rees, _normalized=True)


def delta_embed(B: Sequence[Sequence[int]], x: UEElement, n_out: int) -> UEElement:
    """Diagonal embedding for an ordered set partition: the letter x^(j)
    goes to the sum of x^(k) over k in part B_j (0-based factor labels)."""
    if x.n != len(B):
        raise PartitionMismatch(f"{len(B)} parts for {x.n} factors")
    out = UEElement.zero(x.alg, n_out, x.rees)
    for w, c in x.terms.items():
        expanded = UEElement(x.alg, n_out, {(): c}, x.rees, _normalized=True)
        for (f, s) in w:
            summed = UEElement(x.alg, n_out,
                               {((k, s),): Fraction(1) for k in B[f]},
                               x.rees, _normalized=True)
            expanded = expanded * summed
        out = out + expanded
    return out


def insert_factors(x: UEElement, positions: Sequence[int], n_out: int) -> UEElement:
    """Relabel factor j of x to positions[j] (an injection into range(n_out))."""
    terms = {tuple((positions[f], s) for f, s in w): c for w, c in x.terms.items()}
    return UEElement(x.alg, n_out, terms, x.rees)


# ---------------------------------------------------------------------------
# reductions eliminating the distinguished factor 0
# ---------------------------------------------------------------------------

def _shift_down(x: UEElement, rees_out: bool = False) -> UEElement:
    """Drop factor 0 from the index set: factor j >= 1 becomes j - 1."""
    terms = {}
    for w, c in x.terms.items():
        assert all(f >= 1 for f, _ in w)
        terms[tuple((f - 1, s) for f, s in w)] = c
    return UEElement(x.alg, x.n - 1, terms, rees_out, _normalized=True)


def _block_of(alg: LieAlgebraData, sym: int) -> str:
    if sym < alg.n_pos:
        return "f"
    if sym < alg.n_pos + alg.rank:
        return "h"
    return "e"


def psi_reduce(x: UEElement, theta: CartanVector, rees: bool = False) -> UEElement:
    """Quotient map by the diagonal n+ at character theta, applied termwise.

    For each PBW term a_- a_0 a_+ (x) b in the distinguished factor 0:
    drop it if a_- is nonempty, evaluate a_0 through theta, and move a_+
    to the right of b through the antipode and the full diagonal of the
    remaining n factors.  In the Rees variant each moved positive letter
    carries one power of eps.  The result lives over n factors.
    """
    alg, n1 = x.alg, x.n
    n = n1 - 1
    theta_vals = {alg.h_indices[k]: c for k, c in
                  enumerate(alg.weight_of_cartan(theta))}
    out = UEElement.zero(alg, n1, x.rees)
    for w, c in x.terms.items():
        zero_part = tuple(l for l in w if l[0] == 0)
        rest = tuple(l for l in w if l[0] != 0)
        if any(_block_of(alg, s) == "f" for _, s in zero_part):
            continue
        coeff = c
        for _, s in zero_part:
            if _block_of(alg, s) == "h":
                coeff = coeff * theta_vals[s]
        e_letters = [s for _, s in zero_part if _block_of(alg, s) == "e"]
        elem = UEElement(alg, n1, {rest: coeff}, x.rees, _normalized=True)
        for s in reversed(e_letters):
            diag = UEElement(alg, n1, {((j, s),): Fraction(-1) for j in range(1, n1)},
                             x.rees, _normalized=True)
            if rees:
                diag = diag.scale(EPS)
            elem = elem * diag
        out = out + elem
    return _shift_down(out)


def iota0_reduce(x: UEElement) -> UEElement:
    """Eliminate factor 0 through x^(0) = -sum_{j>=1} x^(j) modulo the
    ideal generated by the full diagonal; result lives over n factors."""
    alg, n1 = x.alg, x.n
    pending = dict(x.terms)
    done: Dict[Word, object] = {}
    while pending:
        w, c = pending.popitem()
        zero_part = [l for l in w if l[0] == 0]
        if not zero_part:
            v = done.get(w, 0) + c
            if v:
                done[w] = v
            elif w in done:
                del done[w]
            continue
        # the last factor-0 letter commutes past the other factors, so it can
        # be treated as the rightmost letter of the word and substituted
        sym = zero_part[-1][1]
        head = tuple(zero_part[:-1]) + tuple(l for l in w if l[0] != 0)
        repl = UEElement(alg, n1, {head: c}, x.rees, _normalized=True) * \
            UEElement(alg, n1, {((j, sym),): Fraction(-1) for j in range(1, n1)},
                      x.rees, _normalized=True)
        for w2, c2 in repl.terms.items():
            v = pending.get(w2, 0) + c2
            if v:
                pending[w2] = v
            elif w2 in pending:
                del pending[w2]
    return _shift_down(UEElement(alg, n1, done, x.rees, _normalized=True))
