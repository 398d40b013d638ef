"""Exact dense linear algebra over a field (Fraction or RatFunc entries)."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple


def rref(rows: Sequence[Sequence]) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def in_row_space(rows_rref: Sequence[Sequence], pivots: Sequence[int], v: Sequence) -> bool:
    """Membership test against an already-reduced basis."""
    w = list(v)
    for row, p in zip(rows_rref, pivots):
        if w[p] != 0:
            f = w[p]
            w = [a - f * b for a, b in zip(w, row)]
    return all(x == 0 for x in w)


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List]:
    """Basis of the right kernel of the matrix with the given rows."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, p in zip(red, pivots):
            v[p] = -row[fc]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List]:
    """One solution of A x = b, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    n = len(rows[0]) if rows else 0
    for row, p in zip(red, pivots):
        if p == n:
            return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[List]:
    nb = len(b[0])
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(nb)]
            for i in range(len(a))]


def mat_inverse(a: Sequence[Sequence]) -> List[List]:
    n = len(a)
    aug = [list(a[i]) + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
           for i in range(n)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]
