"""Floating-point spectral layer: joint diagonalization of commuting
families on tensor modules, simplicity / cyclicity / normality tests, and
eigenline continuation along parameter paths.

Exact elements are converted to dense complex matrices; the joint
eigenbasis comes from a seeded random real combination with recursive
refinement inside degenerate clusters.  A square-free characteristic
polynomial oracle over the rationals guards small cases.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment

from .arith import Tolerance
from .errors import (FormNotPositive, IllConditioned, SpectrumCollision)
from .liealg import LieAlgebraData
from .reps import TensorRep, matrix_of


def to_ndarray(mat: Sequence[Sequence]) -> np.ndarray:
    return np.array([[complex(c) for c in row] for row in mat],
                    dtype=complex)


def matrices_for(elements, V: TensorRep) -> List[np.ndarray]:
    return [to_ndarray(matrix_of(x, V)) for x in elements]


@dataclass
class CommutingFamily:
    matrices: List[np.ndarray]
    labels: List[str] = field(default_factory=list)
    tol: Tolerance = field(default_factory=Tolerance)

    def __post_init__(self):
        if not self.labels:
            self.labels = [f"A{k}" for k in range(len(self.matrices))]
        self.matrices = [np.asarray(m, dtype=complex) for m in self.matrices]

    @property
    def dim(self) -> int:
        return self.matrices[0].shape[0]

    def max_commutator_residual(self) -> float:
        worst = 0.0
        for a in range(len(self.matrices)):
            for b in range(a + 1, len(self.matrices)):
                A, B = self.matrices[a], self.matrices[b]
                scale = max(np.linalg.norm(A) * np.linalg.norm(B), 1.0)
                worst = max(worst, np.linalg.norm(A @ B - B @ A) / scale)
        return worst

    def is_commuting(self) -> bool:
        return self.max_commutator_residual() <= self.tol.absolute


@dataclass
class JointSpectrum:
    eigenlines: List[np.ndarray]
    eigenvalue_table: List[List[complex]]
    simple: bool
    residual_max: float

    def to_json(self) -> dict:
        return {
            "eigenvalues": [[repr(v) for v in row]
                            for row in self.eigenvalue_table],
            "simple": self.simple,
            "residual_max": float(self.residual_max),
        }


def _cluster(values: np.ndarray, tol: float) -> List[List[int]]:
    order = np.argsort(values.real + 1e-9 * values.imag)
    groups: List[List[int]] = []
    for k in order:
        if groups and abs(values[k] - values[groups[-1][-1]]) <= tol:
            groups[-1].append(int(k))
        else:
            groups.append([int(k)])
    return groups


def _joint_vectors(mats: List[np.ndarray], rng, tol: float,
                   depth: int = 0) -> List[np.ndarray]:
    d = mats[0].shape[0]
    if d == 1:
        return [np.array([1.0 + 0j])]
    if depth > 8:
        raise IllConditioned("cluster refinement did not terminate")
    coeffs = rng.standard_normal(len(mats))
    A = sum(c * M for c, M in zip(coeffs, mats))
    w, vecs = np.linalg.eig(A)
    scale = max(float(np.linalg.norm(A)), 1.0)
    out: List[np.ndarray] = []
    for grp in _cluster(w, 100 * tol * scale):
        if len(grp) == 1:
            v = vecs[:, grp[0]]
            out.append(v / np.linalg.norm(v))
            continue
        B, _ = np.linalg.qr(vecs[:, grp])
        sub = [B.conj().T @ M @ B for M in mats]
        k = len(grp)
        if all(np.linalg.norm(M - (np.trace(M) / k) * np.eye(k))
               <= 1e3 * tol * max(float(np.linalg.norm(M)), 1.0)
               for M in sub):
            # genuine joint eigenspace: every matrix acts as a scalar
            for c in range(k):
                v = B[:, c]
                out.append(v / np.linalg.norm(v))
            continue
        for u in _joint_vectors(sub, rng, tol, depth + 1):
            v = B @ u
            out.append(v / np.linalg.norm(v))
    return out


def joint_eigenbasis(F: CommutingFamily, seed: int = 0) -> JointSpectrum:
    rng = np.random.default_rng(seed)
    vecs = _joint_vectors(F.matrices, rng, F.tol.absolute)
    table: List[List[complex]] = []
    residual = 0.0
    for v in vecs:
        row = []
        for M in F.matrices:
            lam = complex(v.conj() @ (M @ v))
            scale = max(float(np.linalg.norm(M)), 1.0)
            residual = max(residual,
                           float(np.linalg.norm(M @ v - lam * v)) / scale)
            row.append(lam)
        table.append(row)
    tol = F.tol.absolute
    simple = True
    scales = [max(float(np.linalg.norm(M)), 1.0) for M in F.matrices]
    for a in range(len(vecs)):
        for b in range(a + 1, len(vecs)):
            if all(abs(table[a][k] - table[b][k]) <= 100 * tol * scales[k]
                   for k in range(len(F.matrices))):
                simple = False
    return JointSpectrum(vecs, table, simple, residual)


def simple_spectrum_exact(mats: Sequence[Sequence[Sequence[Fraction]]],
                          seed: int = 0) -> bool:
    """Exact oracle: a random small-integer combination has square-free
    characteristic polynomial iff the joint spectrum is simple (generic
    combination of a commuting family separates joint eigenvalues)."""
    import sympy
    rng = np.random.default_rng(seed)
    d = len(mats[0])
    coeffs = [int(c) for c in rng.integers(1, 1000, size=len(mats))]
    A = [[sum(Fraction(coeffs[k]) * mats[k][i][j] for k in range(len(mats)))
          for j in range(d)] for i in range(d)]
    M = sympy.Matrix(d, d, lambda i, j: sympy.Rational(A[i][j].numerator,
                                                       A[i][j].denominator))
    x = sympy.Symbol("x")
    p = M.charpoly(x).as_expr()
    g = sympy.gcd(p, sympy.diff(p, x))
    return sympy.degree(g, x) == 0


def is_cyclic(F: CommutingFamily, v: np.ndarray,
              degree_cap: Optional[int] = None) -> bool:
    d = F.dim
    v = np.asarray(v, dtype=complex)
    if np.linalg.norm(v) == 0:
        return False
    cap = d if degree_cap is None else degree_cap
    frontier = [v / np.linalg.norm(v)]
    span = np.array(frontier).T
    rank = 1
    for _ in range(cap):
        new = []
        for u in frontier:
            for M in F.matrices:
                w = M @ u
                nw = np.linalg.norm(w)
                if nw > 0:
                    new.append(w / nw)
        if not new:
            break
        cand = np.concatenate([span] + [w.reshape(-1, 1) for w in new],
                              axis=1)
        q, r = np.linalg.qr(cand)
        keep = np.abs(r).max(axis=1) > F.tol.absolute * max(1.0, np.abs(r).max())
        new_rank = int(keep.sum())
        if new_rank == rank:
            break
        span = q[:, keep]
        rank = new_rank
        frontier = [span[:, k] for k in range(rank)]
        if rank == d:
            return True
    return rank == d


def is_normal_family(F: CommutingFamily, form: Sequence[Sequence]) -> bool:
    G = np.array([[complex(c) for c in row] for row in form])
    try:
        np.linalg.cholesky(G)
    except np.linalg.LinAlgError:
        raise FormNotPositive("Gram matrix is not positive definite")
    Ginv = np.linalg.inv(G)
    for M in F.matrices:
        adj = Ginv @ M.conj().T @ G
        scale = max(float(np.linalg.norm(M)) ** 2, 1.0)
        if np.linalg.norm(M @ adj - adj @ M) / scale > F.tol.absolute:
            return False
    return True


def _match(prev: List[np.ndarray], cur: List[np.ndarray]) -> Tuple[List[int], float]:
    """Maximal-overlap assignment of eigenlines; returns (perm, worst overlap)."""
    P = np.array([[abs(np.vdot(p, c)) for c in cur] for p in prev])
    rows, cols = linear_sum_assignment(-P)
    perm = [0] * len(prev)
    worst = 1.0
    for r, c in zip(rows, cols):
        perm[r] = int(c)
        worst = min(worst, P[r, c])
    return perm, worst


def monodromy_permutation(family_at: Callable[[Fraction], CommutingFamily],
                          steps: int = 16, seed: int = 0,
                          max_depth: int = 10) -> List[int]:
    """Continue the joint eigenlines of family_at(t) for t from 0 to 1 and
    return the end-to-start permutation.  Subdivides adaptively when the
    overlap assignment is ambiguous; requires simple spectrum at every
    sample."""
    def spectrum(t):
        F = family_at(t)
        try:
            S = joint_eigenbasis(F, seed=seed)
        except IllConditioned as exc:
            raise SpectrumCollision(
                f"joint diagonalization failed at t = {t}: {exc}") from exc
        if not S.simple:
            raise SpectrumCollision(f"spectrum not simple at t = {t}")
        return S

    samples = [Fraction(k, steps) for k in range(steps + 1)]
    spec = {t: spectrum(t) for t in samples}

    def continue_between(t0, t1, depth=0):
        perm, worst = _match(spec[t0].eigenlines, spec[t1].eigenlines)
        if worst > 0.75 or depth >= max_depth:
            return perm
        mid = (t0 + t1) / 2
        if mid not in spec:
            spec[mid] = spectrum(mid)
        p1 = continue_between(t0, mid, depth + 1)
        p2 = continue_between(mid, t1, depth + 1)
        return [p2[p1[k]] for k in range(len(p1))]

    total = list(range(len(spec[samples[0]].eigenlines)))
    for a, b in zip(samples, samples[1:]):
        step = continue_between(a, b)
        total = [step[total[k]] for k in range(len(total))]
    # close the loop: align the final frame with the initial one
    closing, worst = _match(spec[samples[-1]].eigenlines,
                            spec[samples[0]].eigenlines)
    return [closing[total[k]] for k in range(len(total))]


def trig_matrices(L: LieAlgebraData, V: TensorRep, z: Sequence[complex],
                  theta_coords: Sequence[complex]) -> List[np.ndarray]:
    """Matrices of the trigonometric Hamiltonians with complex parameters,
    assembled from exact building-block matrices: theta^(i)/z_i
    + sum_{j != i} Omega^(ij)/(z_i - z_j) - sum_j OmegaMinus^(ij)/z_i."""
    from .envelope import cartan_element, omega_pair
    from .liealg import CartanVector
    n = len(z)
    d = V.dim
    h_blocks = []
    for i in range(n):
        row = []
        for k in range(L.rank):
            ek = CartanVector(tuple(Fraction(1) if t == k else Fraction(0)
                                    for t in range(L.rank)))
            row.append(to_ndarray(matrix_of(cartan_element(L, n, i, ek), V)))
        h_blocks.append(row)
    out = []
    for i in range(n):
        M = np.zeros((d, d), dtype=complex)
        for k in range(L.rank):
            M += complex(theta_coords[k]) / z[i] * h_blocks[i][k]
        for j in range(n):
            if j != i:
                M += to_ndarray(matrix_of(omega_pair(L, n, i, j), V)) \
                    / (z[i] - z[j])
            M -= to_ndarray(matrix_of(omega_pair(L, n, i, j, part="minus"),
                                      V)) / z[i]
        out.append(M)
    return out


def circle_point(t: Fraction) -> complex:
    """A rational point of the unit circle: (1 - i t)/(1 + i t)."""
    tt = float(t)
    return (1 - 1j * tt) / (1 + 1j * tt)


def compact_trig_theta(L: LieAlgebraData, mu_key: Sequence[Fraction],
                       imag: Sequence[float], sign: int = 1) -> List[complex]:
    """Cartan coordinates of a theta making the trigonometric family act by
    normal operators on the weight space labelled by mu_key when the points
    lie on the unit circle: real part fixed at -(t_{mu/2} + t_rho) with the
    weights converted to Cartan elements through the invariant form, and a
    free purely imaginary part.  sign=-1 flips the mu/2 term; only sign=+1
    yields normality (the t_rho shift compensates the f e ordering of the
    lowering half-Casimir)."""
    half_mu = L.cartan_from_weight([Fraction(m) / 2 for m in mu_key])
    out = []
    for k in range(L.rank):
        re = -(sign * half_mu.coords[k] + L.rho.coords[k])
        out.append(float(re) + 1j * float(imag[k]))
    return out


def inhom_matrices(L: LieAlgebraData, V: TensorRep, z: Sequence[complex],
                   chi_coords: Sequence[complex]) -> List[np.ndarray]:
    """Matrices of the inhomogeneous Hamiltonians with complex parameters:
    chi^(i) + sum_{j != i} Omega^(ij)/(z_i - z_j)."""
    from .envelope import cartan_element, omega_pair
    from .liealg import CartanVector
    n = len(z)
    d = V.dim
    out = []
    for i in range(n):
        M = np.zeros((d, d), dtype=complex)
        for k in range(L.rank):
            ek = CartanVector(tuple(Fraction(1) if t == k else Fraction(0)
                                    for t in range(L.rank)))
            M += complex(chi_coords[k]) * to_ndarray(
                matrix_of(cartan_element(L, n, i, ek), V))
        for j in range(n):
            if j != i:
                M += to_ndarray(matrix_of(omega_pair(L, n, i, j), V)) \
                    / (z[i] - z[j])
        out.append(M)
    return out
