"""Exact scalar foundations.

Arbitrary-precision rationals (stdlib Fraction), univariate rational
functions in one formal variable eps, projective-line values over the
rationals, and the tolerance policy for the floating-point layer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .errors import IndeterminateValue, PoleAtZero

Rational = Fraction

Scalar = Union[Fraction, "RatFunc"]


def rat(x) -> Fraction:
    """Parse an exact rational from an int, Fraction, or a "p/q" string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot parse exact rational from {x!r}")


# ---------------------------------------------------------------------------
# polynomials in eps over Fraction (ascending coefficient tuples)
# ---------------------------------------------------------------------------

def _ptrim(c: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
    n = len(c)
    while n > 0 and c[n - 1] == 0:
        n -= 1
    return c[:n]


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(tuple(out))


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(tuple(out))


def _pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    while len(_ptrim(tuple(a))) >= len(b):
        a = list(_ptrim(tuple(a)))
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
        a = a[:-1]
    return _ptrim(tuple(q)), _ptrim(tuple(a))


def _pgcd(a, b):
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = tuple(x / lead for x in a)  # monic
    return a


def _peval(a, t: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(a):
        out = out * t + c
    return out


def _pval(a) -> int:
    """Order of vanishing at 0 (valuation); len(a) for the zero polynomial."""
    for i, c in enumerate(a):
        if c != 0:
            return i
    return len(a)


class RatFunc:
    """A reduced rational function in the formal variable eps.

    Stored with coprime numerator/denominator and monic denominator, so
    equality is literal equality of coefficient tuples.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = _ptrim(tuple(Fraction(c) for c in num))
        den = _ptrim(tuple(Fraction(c) for c in den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = _pgcd(num, den)
            if len(g) > 1:
                num, _ = _pdivmod(num, g)
                den, _ = _pdivmod(den, g)
            lead = den[-1]
            if lead != 1:
                num = tuple(c / lead for c in num)
                den = tuple(c / lead for c in den)
        else:
            den = (Fraction(1),)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------
    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc((Fraction(c),))

    @staticmethod
    def coerce(x: Scalar) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return RatFunc.const(Fraction(x))

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else Fraction(0)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = RatFunc.coerce(other)
        return RatFunc(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                       _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num = _pneg(self.num)
        r.den = self.den
        return r

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) + (-self)

    def __mul__(self, other):
        o = RatFunc.coerce(other)
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation ---------------------------------------------------------
    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        d = _peval(self.den, t)
        if d == 0:
            raise PoleAtZero(f"pole at eps = {t}")
        return _peval(self.num, t) / d

    def valuation(self) -> int:
        """Order at eps = 0 (positive: zero, negative: pole); 0 for units."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        return _pval(self.num) - _pval(self.den)

    def leading_laurent(self) -> Tuple[int, Fraction]:
        """Return (k, c) with f = c*eps^k * (1 + O(eps)); f must be nonzero."""
        k = self.valuation()
        nv, dv = _pval(self.num), _pval(self.den)
        c = self.num[nv] / self.den[dv]
        return k, c

    def shift(self, k: int) -> "RatFunc":
        """Multiply by eps^k (k may be negative)."""
        if k >= 0:
            return self * RatFunc((Fraction(0),) * k + (Fraction(1),))
        return self / RatFunc((Fraction(0),) * (-k) + (Fraction(1),))

    def __repr__(self):
        def fmt(p):
            if not p:
                return "0"
            terms = []
            for i, c in enumerate(p):
                if c == 0:
                    continue
                if i == 0:
                    terms.append(str(c))
                elif i == 1:
                    terms.append(f"{c}*eps" if c != 1 else "eps")
                else:
                    terms.append(f"{c}*eps^{i}" if c != 1 else f"eps^{i}")
            return " + ".join(terms)

        if self.den == (Fraction(1),):
            return fmt(self.num)
        return f"({fmt(self.num)})/({fmt(self.den)})"


EPS = RatFunc((Fraction(0), Fraction(1)))
ONE_RF = RatFunc.const(1)


def limit_at_zero(f: RatFunc) -> Fraction:
    """Value of f at eps = 0; raises PoleAtZero on a pole (use leading_laurent)."""
    return f(0)


def leading_laurent(f: RatFunc) -> Tuple[int, Fraction]:
    return f.leading_laurent()


# ---------------------------------------------------------------------------
# projective line over the rationals
# ---------------------------------------------------------------------------

class P1Value:
    """A point [a : b] of the projective line over the rationals.

    Finite values embed as [v : 1]; infinity is [1 : 0].  Stored in a
    canonical scaling so equality and hashing are structural.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a, b = Fraction(a), Fraction(b)
        if a == 0 and b == 0:
            raise ValueError("[0 : 0] is not a point of P^1")
        # canonical scaling: first nonzero coordinate equals 1
        s = a if a != 0 else b
        self.a = a / s
        self.b = b / s

    @staticmethod
    def of(v) -> "P1Value":
        return P1Value(Fraction(v), 1)

    @staticmethod
    def infinity() -> "P1Value":
        return P1Value(1, 0)

    def is_infinite(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0

    def value(self) -> Fraction:
        if self.is_infinite():
            raise ZeroDivisionError("infinite P^1 value")
        return self.a / self.b

    def inverse(self) -> "P1Value":
        return P1Value(self.b, self.a)

    def __mul__(self, other: "P1Value") -> "P1Value":
        if (self.is_zero() and other.is_infinite()) or (self.is_infinite() and other.is_zero()):
            raise IndeterminateValue("0 * inf")
        return P1Value(self.a * other.a, self.b * other.b)

    def __neg__(self) -> "P1Value":
        return P1Value(-self.a, self.b)

    def __add__(self, other: "P1Value") -> "P1Value":
        if self.is_infinite() or other.is_infinite():
            if self.is_infinite() and other.is_infinite():
                raise IndeterminateValue("inf + inf")
            return P1Value.infinity()
        return P1Value(self.a * other.b + other.a * self.b, self.b * other.b)

    def __eq__(self, other):
        if not isinstance(other, P1Value):
            return NotImplemented
        return self.a * other.b == self.b * other.a

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"[{self.a}:{self.b}]"

    def to_json(self) -> str:
        return f"[{self.a}:{self.b}]"

    @staticmethod
    def from_json(s: str) -> "P1Value":
        body = s.strip().lstrip("[").rstrip("]")
        a, b = body.split(":")
        return P1Value(Fraction(a), Fraction(b))


def p1_equal(x: P1Value, y: P1Value) -> bool:
    """Equality of projective values via vanishing cross-product."""
    return x.a * y.b == x.b * y.a


def p1_limit(f: RatFunc) -> P1Value:
    """The limit of f(eps) as eps -> 0, as a point of P^1 (poles allowed)."""
    if f.is_zero():
        return P1Value.of(0)
    k, c = f.leading_laurent()
    if k > 0:
        return P1Value.of(0)
    if k < 0:
        return P1Value.infinity()
    return P1Value.of(c)


@dataclass(frozen=True)
class Tolerance:
    absolute: float = 1e-10
    relative: float = 1e-9

    def __post_init__(self):
        if not (self.absolute >= 0 and self.relative >= 0):
            raise ValueError("tolerances must be nonnegative")
        if not (self.absolute < float("inf") and self.relative < float("inf")):
            raise ValueError("tolerances must be finite")

    def close(self, x: float, y: float, scale: float = 1.0) -> bool:
        return abs(x - y) <= self.absolute + self.relative * max(abs(x), abs(y), scale)
