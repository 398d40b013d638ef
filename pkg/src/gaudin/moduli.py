"""Parameter spaces for the commuting families: configuration spaces of
marked points and their compactifications, in exact projective coordinates.

Spaces:
  M    -- stable genus-0 curves with n finite markings (plus infinity),
          cross-ratio coordinates mu_ijk = (z_i - z_k)/(z_i - z_j)
  T    -- compactified difference space, coordinates nu_ij (delta_ij = 1/nu_ij)
  F    -- cactus flowers: nu/delta plus cross-ratios inside collapsed petals
  calF -- the one-parameter deformation of F with parameter eps,
          interior coordinates nu_ij = (1 - eps z_j)/(z_i - z_j)

Boundary points may carry a witness: an interior one-parameter family z(t)
whose coordinatewise limits at t = 0 reproduce the point.  Chart values that
are indeterminate products of stored coordinates (0 times infinity) are then
evaluated exactly along the witness.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .arith import EPS, P1Value, RatFunc, Rational, p1_limit, rat
from .errors import (ChartViolation, CoincidentPoints, PoleAtParameter,
                     UnstableConfiguration)

Tree = Union[int, Tuple["Tree", "Tree"]]


# ---------------------------------------------------------------------------
# planar binary forests


class PlanarBinaryForest:
    """An ordered forest of planar binary trees with leaves labelled 1..n.

    Vertices are addressed by paths: (tree_index, p) where p is a tuple of
    0/1 steps from the root ('' = the stem above the root).  The stem of each
    tree counts as a vertex, giving the bijection vertices <-> leaves:
    an internal vertex maps to the rightmost leaf of its left branch, the
    stem maps to the rightmost leaf of its tree.
    """

    def __init__(self, trees: Sequence[Tree]):
        self.trees = list(trees)
        self.leaf_tree: Dict[int, int] = {}
        self.leaf_path: Dict[int, Tuple[int, ...]] = {}
        for ti, t in enumerate(self.trees):
            for path, leaf in _walk(t):
                if leaf in self.leaf_tree:
                    raise ValueError(f"duplicate leaf {leaf}")
                self.leaf_tree[leaf] = ti
                self.leaf_path[leaf] = path
        self.n = len(self.leaf_tree)
        if set(self.leaf_tree) != set(range(1, self.n + 1)):
            raise ValueError("leaves must be labelled 1..n")

    @classmethod
    def parse(cls, s: str) -> "PlanarBinaryForest":
        toks = s.replace("(", " ( ").replace(")", " ) ").split()
        trees, stack = [], []
        for tok in toks:
            if tok == "(":
                stack.append([])
            elif tok == ")":
                grp = stack.pop()
                if len(grp) == 1 and not stack:
                    trees.append(grp[0])     # a singleton tree like "(4)"
                elif len(grp) == 2:
                    (stack[-1] if stack else trees).append((grp[0], grp[1]))
                else:
                    raise ValueError("vertices must be binary")
            else:
                (stack[-1] if stack else trees).append(int(tok))
        if stack:
            raise ValueError("unbalanced parentheses")
        return cls(trees)

    def __str__(self):
        def fmt(t):
            return str(t) if isinstance(t, int) else f"({fmt(t[0])} {fmt(t[1])})"
        return "".join(fmt(t) if isinstance(t, tuple) else f"({t})"
                       for t in self.trees)

    def leaves_of_tree(self, ti: int) -> List[int]:
        return [leaf for _, leaf in _walk(self.trees[ti])]

    def same_tree(self, i: int, j: int) -> bool:
        return self.leaf_tree[i] == self.leaf_tree[j]

    def meet(self, i: int, j: int) -> Tuple[int, Tuple[int, ...]]:
        """Deepest common vertex of two leaves of one tree."""
        assert self.same_tree(i, j) and i != j
        pi, pj = self.leaf_path[i], self.leaf_path[j]
        k = 0
        while k < len(pi) and k < len(pj) and pi[k] == pj[k]:
            k += 1
        return (self.leaf_tree[i], pi[:k])

    def subtree(self, ti: int, path: Tuple[int, ...]) -> Tree:
        t = self.trees[ti]
        for step in path:
            t = t[step]
        return t

    def internal_vertices(self) -> List[Tuple[int, Tuple[int, ...]]]:
        out = []
        for ti, t in enumerate(self.trees):
            out.extend((ti, p) for p in _internal_paths(t))
        return out

    def vertex_leaf(self, ti: int, path: Optional[Tuple[int, ...]]) -> int:
        """The leaf assigned to a vertex; path None means the stem."""
        if path is None:
            return _rightmost(self.trees[ti])
        sub = self.subtree(ti, path)
        return _rightmost(sub[0])

    def all_vertices(self):
        """Stems and internal vertices; in bijection with the leaves."""
        verts: List[Tuple[int, Optional[Tuple[int, ...]]]] = []
        for ti in range(len(self.trees)):
            verts.append((ti, None))
        verts.extend(self.internal_vertices())
        return verts


def _walk(t: Tree, path: Tuple[int, ...] = ()):
    if isinstance(t, int):
        yield path, t
    else:
        yield from _walk(t[0], path + (0,))
        yield from _walk(t[1], path + (1,))


def _internal_paths(t: Tree, path: Tuple[int, ...] = ()):
    if isinstance(t, tuple):
        yield path
        yield from _internal_paths(t[0], path + (0,))
        yield from _internal_paths(t[1], path + (1,))


def _rightmost(t: Tree) -> int:
    while isinstance(t, tuple):
        t = t[1]
    return t


def _leftmost(t: Tree) -> int:
    while isinstance(t, tuple):
        t = t[0]
    return t


# ---------------------------------------------------------------------------
# points

Coord = P1Value
Pair = Tuple[int, int]
Triple = Tuple[int, int, int]


@dataclass
class ModuliPoint:
    space: str                       # "M" | "T" | "F" | "calF"
    n: int
    eps: Optional[Rational] = None
    nu: Dict[Pair, Coord] = field(default_factory=dict)
    mu: Dict[Triple, Coord] = field(default_factory=dict)
    witness: Optional[Tuple[RatFunc, ...]] = None

    def delta(self, i: int, j: int) -> Coord:
        return self.nu[(i, j)].inverse()

    @property
    def stratum(self) -> Dict[str, object]:
        """Derived descriptor: petal partition (delta finite <=> same petal)
        and, inside petals, the collision partition (delta = 0)."""
        if self.space == "M":
            coll = _partition(self.n, lambda i, j: any(
                self.mu.get((i, j, k), P1Value.of(1)).is_infinite()
                for k in range(1, self.n + 1) if k not in (i, j)))
            return {"collisions": coll}
        petals = _partition(
            self.n, lambda i, j: not self.nu[(min(i, j), max(i, j))].is_zero())
        coll = _partition(
            self.n, lambda i, j: self.nu[(min(i, j), max(i, j))].is_infinite())
        return {"petals": petals, "collisions": coll}

    def to_json(self) -> dict:
        out = {"space": self.space, "n": self.n}
        if self.eps is not None:
            out["eps"] = str(self.eps)
        coords: Dict[str, dict] = {}
        if self.nu:
            coords["nu"] = {f"{i},{j}": v.to_json() for (i, j), v in sorted(self.nu.items())}
        if self.mu:
            coords["mu"] = {f"{i},{j},{k}": v.to_json()
                            for (i, j, k), v in sorted(self.mu.items())}
        out["coords"] = coords
        return out

    @classmethod
    def from_json(cls, d: dict) -> "ModuliPoint":
        eps = rat(d["eps"]) if "eps" in d else None
        nu = {tuple(int(x) for x in k.split(",")): P1Value.from_json(v)
              for k, v in d.get("coords", {}).get("nu", {}).items()}
        mu = {tuple(int(x) for x in k.split(",")): P1Value.from_json(v)
              for k, v in d.get("coords", {}).get("mu", {}).items()}
        return cls(d["space"], d["n"], eps, nu, mu)


def _partition(n: int, related) -> List[List[int]]:
    parent = list(range(n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if related(i, j):
                parent[find(i)] = find(j)
    groups: Dict[int, List[int]] = {}
    for i in range(1, n + 1):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def point_from_marked_points(space: str, z: Sequence[Rational],
                             eps: Optional[Rational] = None) -> ModuliPoint:
    z = [rat(c) for c in z]
    n = len(z)
    for i in range(n):
        for j in range(i + 1, n):
            if z[i] == z[j]:
                raise CoincidentPoints(f"z_{i+1} = z_{j+1} = {z[i]}")
    if space == "calF":
        if eps is None:
            raise ValueError("calF requires eps")
        eps = rat(eps)
        for i, zi in enumerate(z):
            if 1 - eps * zi == 0:
                raise PoleAtParameter(f"1 - eps*z_{i+1} = 0")
    else:
        eps = None if space == "M" else rat(0)

    pt = ModuliPoint(space, n, eps if space == "calF" else None)
    e = eps if eps is not None else Fraction(0)
    if space != "M":
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    pt.nu[(i, j)] = P1Value.of(
                        (1 - e * z[j - 1]) / (z[i - 1] - z[j - 1]))
    if space != "T":
        for i, j, k in itertools.permutations(range(1, n + 1), 3):
            pt.mu[(i, j, k)] = P1Value.of(
                (z[i - 1] - z[k - 1]) / (z[i - 1] - z[j - 1]))
    pt.witness = tuple(RatFunc.const(c) for c in z)
    return pt


def point_from_family(space: str, zt: Sequence[RatFunc],
                      eps: Optional[Rational] = None) -> ModuliPoint:
    """Coordinatewise t->0 limit of an interior family; keeps the witness."""
    zt = [RatFunc.coerce(f) for f in zt]
    n = len(zt)
    pt = ModuliPoint(space, n, rat(eps) if space == "calF" else None)
    e = rat(eps) if eps is not None else Fraction(0)
    if space != "M":
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    num = RatFunc.const(1) - e * zt[j - 1]
                    pt.nu[(i, j)] = p1_limit(num / (zt[i - 1] - zt[j - 1]))
    if space != "T":
        for i, j, k in itertools.permutations(range(1, n + 1), 3):
            pt.mu[(i, j, k)] = p1_limit(
                (zt[i - 1] - zt[k - 1]) / (zt[i - 1] - zt[j - 1]))
    pt.witness = tuple(zt)
    return pt


# ---------------------------------------------------------------------------
# validators


def _rel_mul_eq(x: Coord, y: Coord, w: Coord) -> bool:
    # x*y = w, cross-multiplied: ax ay bw = bx by aw
    return x.a * y.a * w.b == x.b * y.b * w.a


def _rel_sum_is(x: Coord, y: Coord, c: Fraction) -> bool:
    # x + y = c: ax by + ay bx = c bx by
    return x.a * y.b + y.a * x.b == c * x.b * y.b


def validate(pt: ModuliPoint) -> Dict[str, object]:
    """Check every applicable defining relation in homogeneous form; report
    the first violation or success."""
    one = P1Value.of(1)

    def fail(rel, idx):
        return {"ok": False, "relation": rel, "indices": idx}

    n = pt.n
    labels = range(1, n + 1)
    if pt.space != "M":
        e = pt.eps if pt.eps is not None else Fraction(0)
        for i, j in itertools.combinations(labels, 2):
            x, y = pt.nu[(i, j)], pt.nu[(j, i)]
            if not _rel_sum_is(x, y, Fraction(e)):
                return fail("nu_ij + nu_ji = eps", (i, j))
        for i, j, k in itertools.permutations(labels, 3):
            # nu_ij nu_jk = nu_ik nu_jk + nu_ij nu_ik - eps nu_ik
            nij, njk, nik = pt.nu[(i, j)], pt.nu[(j, k)], pt.nu[(i, k)]
            lhs = nij.a * njk.a * nik.b
            rhs = (nik.a * njk.a * nij.b + nij.a * nik.a * njk.b
                   - Fraction(e) * nik.a * nij.b * njk.b)
            if lhs != rhs:
                return fail("nu_ij nu_jk = nu_ik nu_jk + nu_ij nu_ik - eps nu_ik",
                            (i, j, k))
    if pt.mu:
        for i, j, k in itertools.permutations(labels, 3):
            if (i, j, k) not in pt.mu:
                continue
            m1, m2 = pt.mu[(i, j, k)], pt.mu.get((i, k, j))
            if m2 is not None and not _rel_mul_eq(m1, m2, one):
                return fail("mu_ijk mu_ikj = 1", (i, j, k))
            m3 = pt.mu.get((j, i, k))
            if m3 is not None and not _rel_sum_is(m1, m3, Fraction(1)):
                return fail("mu_ijk + mu_jik = 1", (i, j, k))
        for i, j, k, l in itertools.permutations(labels, 4):
            m1 = pt.mu.get((i, j, k))
            m2 = pt.mu.get((i, l, j))
            m3 = pt.mu.get((i, l, k))
            if None not in (m1, m2, m3) and not _rel_mul_eq(m1, m2, m3):
                return fail("mu_ijk mu_ilj = mu_ilk", (i, j, k, l))
    if pt.space == "F" and pt.mu and pt.nu:
        # compatibility of petal cross-ratios with differences at eps = 0:
        # mu_ijk nu_ik = nu_ij whenever both sides are determinate
        for i, j, k in itertools.permutations(labels, 3):
            m = pt.mu.get((i, j, k))
            if m is None:
                continue
            nik, nij = pt.nu[(i, k)], pt.nu[(i, j)]
            lhs_a, lhs_b = m.a * nik.a, m.b * nik.b
            if (lhs_a, lhs_b) == (0, 0):
                continue
            if lhs_a * nij.b != lhs_b * nij.a:
                return fail("mu_ijk nu_ik = nu_ij", (i, j, k))
    return {"ok": True}


# ---------------------------------------------------------------------------
# charts


def chart_membership(pt: ModuliPoint, forest: PlanarBinaryForest):
    """Membership of the point in the chart of the forest, with the values of
    all chart-regular functions the holonomy construction consumes.

    Returns (True, values) or (False, reason).  values keys:
      ("nu", i, j)          leaves in different trees
      ("delta", i, j)       leaves in one tree
      ("dnu", p, q, i, j)   delta_pq * nu_ij, leaves p,q,i,j in one tree with
                            meet(p,q) weakly above meet(i,j)
      ("ratio", p, q, i, j) (z_p - z_q)/(z_i - z_j) limits (M-type charts)
    """
    if forest.n != pt.n:
        return False, "forest size mismatch"
    vals: Dict[tuple, Fraction] = {}
    wit = pt.witness

    def lim(f: RatFunc) -> Optional[Fraction]:
        v = p1_limit(f)
        return None if v.is_infinite() else v.value()

    e = pt.eps if pt.eps is not None else Fraction(0)

    def nu_t(i, j):
        return (RatFunc.const(1) - e * wit[j - 1]) / (wit[i - 1] - wit[j - 1])

    labels = range(1, pt.n + 1)
    if pt.space != "M":
        for i, j in itertools.permutations(labels, 2):
            v = pt.nu[(i, j)]
            if forest.same_tree(i, j):
                d = v.inverse()
                if d.is_infinite():
                    return False, f"delta_{i}{j} infinite inside a tree"
                vals[("delta", i, j)] = d.value()
            else:
                if v.is_infinite():
                    return False, f"nu_{i}{j} infinite across trees"
                vals[("nu", i, j)] = v.value()
        # products delta_pq nu_ij needed by the vertex vectors: i runs over
        # the left branch of each internal vertex, j over the rest of its tree
        for (ti, path) in forest.internal_vertices():
            sub = forest.subtree(ti, path)
            p, q = _rightmost(sub[0]), _leftmost(sub[1])
            left = set(leaf for _, leaf in _walk(sub[0]))
            tree_leaves = forest.leaves_of_tree(ti)
            for i in left:
                for j in tree_leaves:
                    if j in left:
                        continue
                    dpq = pt.nu[(p, q)].inverse()
                    nij = pt.nu[(i, j)]
                    num, den = dpq.a * nij.a, dpq.b * nij.b
                    if den != 0:
                        vals[("dnu", p, q, i, j)] = Fraction(num) / den
                        continue
                    if num != 0:
                        return False, f"delta_{p}{q} nu_{i}{j} infinite"
                    if wit is None:
                        return False, (f"delta_{p}{q} nu_{i}{j} indeterminate "
                                       "and no witness family")
                    # delta_pq(t) = (z_p - z_q)/(1 - eps z_q)
                    v = lim(nu_t(i, j) * (wit[p - 1] - wit[q - 1])
                            / (RatFunc.const(1) - e * wit[q - 1]))
                    if v is None:
                        return False, f"delta_{p}{q} nu_{i}{j} not regular"
                    vals[("dnu", p, q, i, j)] = v
    else:
        # M-type chart: mu_ijk finite whenever meet(i,k) above meet(i,j);
        # plus the difference ratios used by the vertex vectors
        if len(forest.trees) != 1:
            return False, "M-type charts use a single tree"
        for i, j, k in itertools.permutations(labels, 3):
            mik, mij = forest.meet(i, k), forest.meet(i, j)
            if _above(mik[1], mij[1]) and pt.mu[(i, j, k)].is_infinite():
                return False, f"mu_{i}{j}{k} infinite on its chart"
        if wit is None:
            return False, "ratio values need a witness family for M-type points"
        for (ti, path) in forest.internal_vertices():
            sub = forest.subtree(ti, path)
            p, q = _rightmost(sub[0]), _leftmost(sub[1])
            left = [leaf for _, leaf in _walk(sub[0])]
            for i in left:
                for j in labels:
                    if j in left:
                        continue
                    v = lim((wit[p - 1] - wit[q - 1]) / (wit[i - 1] - wit[j - 1]))
                    if v is None:
                        return False, f"(z_{p}-z_{q})/(z_{i}-z_{j}) not regular"
                    vals[("ratio", p, q, i, j)] = v
    return True, vals


def _above(p: Tuple[int, ...], q: Tuple[int, ...]) -> bool:
    """p strictly farther from the root than q along one branch."""
    return len(p) > len(q) and p[:len(q)] == q


def interior_forest(n: int, space: str) -> PlanarBinaryForest:
    """A default chart containing every interior point: the left caterpillar
    (one tree for M-type, n singleton trees are NOT interior-compatible for
    T/F since interior delta values are finite, so use one caterpillar too)."""
    t: Tree = 1
    for k in range(2, n + 1):
        t = (t, k)
    return PlanarBinaryForest([t])


# ---------------------------------------------------------------------------
# boundary assembly
#
# Assembly grammar (dicts / lists of plain data):
#   M-type:  {"kind": "curve", "points": [(pos, part), ...]}
#     part = leaf label (int) or a nested {"kind": "curve", ...};
#     pos is a Rational, or the string "inf" for attachment at infinity
#     (allowed on the outermost curve only).
#   flower:  {"kind": "flower", "petals": [petal, ...]}
#     petal = {"offset": Rational (distinct per petal),
#              "collapsed": bool,     # True: petal shrunk, cross-ratios free
#              "points": [(pos, part), ...]}  with nested curves allowed


def _family_of_curve(asm, depth: int, base: RatFunc, scale: RatFunc,
                     out: Dict[int, RatFunc]):
    t = EPS
    positions = [p for p, _ in asm["points"]]
    for pos, part in asm["points"]:
        if pos == "inf":
            if depth != 0:
                raise UnstableConfiguration("infinity attachment below top level")
            if isinstance(part, int):
                raise UnstableConfiguration("a bare leaf cannot sit at infinity")
            # shift the component's coordinates away from 0 so nothing lands
            # at a finite position; cross-ratios are shift-invariant
            shift = 1 + max(abs(rat(p)) for p, _ in part["points"]
                            if p != "inf")
            _family_of_curve(part, depth + 1, base + scale / t * shift,
                             scale / t, out)
            continue
        ppos = rat(pos)
        here = base + scale * ppos
        if isinstance(part, int):
            out[part] = here
        else:
            if len(part.get("points", ())) < 2:
                raise UnstableConfiguration("a bubble needs at least two points")
            _family_of_curve(part, depth + 1, here, scale * t, out)
    if len(set(map(str, positions))) != len(positions):
        raise UnstableConfiguration("coincident attachment positions")


def boundary_from_components(asm, space: str = "F",
                             eps: Optional[Rational] = None) -> ModuliPoint:
    """Build the boundary point of a stable assembly, via an explicit
    degenerating family (kept as the witness)."""
    t = EPS
    out: Dict[int, RatFunc] = {}
    if asm["kind"] == "curve":
        if space not in ("M",):
            raise UnstableConfiguration("curve assemblies are M-type")
        if len(asm["points"]) < 2:
            raise UnstableConfiguration("need at least two points")
        _family_of_curve(asm, 0, RatFunc.const(0), RatFunc.const(1), out)
    elif asm["kind"] == "flower":
        if space not in ("T", "F"):
            raise UnstableConfiguration("flower assemblies are T/F-type")
        offs = [rat(p["offset"]) for p in asm["petals"]]
        if len(set(offs)) != len(offs):
            raise UnstableConfiguration("coincident petal offsets")
        for petal, off in zip(asm["petals"], offs):
            scale = t if petal.get("collapsed") else RatFunc.const(1)
            sub = {"kind": "curve", "points": petal["points"]}
            if len(petal["points"]) < 1:
                raise UnstableConfiguration("empty petal")
            _family_of_curve(sub, 1, off / t, scale, out)
    else:
        raise UnstableConfiguration(f"unknown assembly kind {asm['kind']!r}")
    n = len(out)
    if set(out) != set(range(1, n + 1)):
        raise UnstableConfiguration("leaves must be labelled 1..n")
    zt = [out[i] for i in range(1, n + 1)]
    pt = point_from_family(space, zt, eps)
    rep = validate(pt)
    assert rep["ok"], rep
    return pt


def decompose_boundary(pt: ModuliPoint):
    """Invert boundary_from_components on its image (canonical anchoring:
    petal offsets and in-curve positions are read off the coordinates)."""
    n = pt.n
    labels = list(range(1, n + 1))
    if pt.space == "M":
        return _decompose_curve(pt, labels)
    # petals: delta finite <=> same petal
    petals = _partition(n, lambda i, j: not pt.nu[(i, j)].is_zero())
    petal_objs = []
    for k, pet in enumerate(petals):
        collapsed = all(pt.nu[(i, j)].is_infinite()
                        for i, j in itertools.combinations(pet, 2))
        if len(pet) == 1:
            collapsed = False
        if collapsed and len(pet) > 1:
            i0, j0 = pet[0], pet[1]
            pts = []
            for l in pet:
                if l == i0:
                    pts.append((Fraction(0), l))
                elif l == j0:
                    pts.append((Fraction(1), l))
                else:
                    # z_l relative to z_i0 = 0, z_j0 = 1 is mu_{i0 j0 l}
                    pts.append((pt.mu[(i0, j0, l)].value(), l))
            petal_objs.append({"offset": Fraction(k), "collapsed": True,
                               "points": pts})
        else:
            i0 = pet[0]
            pts = []
            for l in pet:
                d = pt.nu[(l, i0)].inverse() if l != i0 else P1Value.of(0)
                pts.append((d.value(), l))
            petal_objs.append({"offset": Fraction(k), "collapsed": False,
                               "points": pts})
    return {"kind": "flower", "petals": petal_objs}


def _decompose_curve(pt: ModuliPoint, labels):
    # canonical decompositions of M-type points are only defined up to the
    # projective group; flower points carry a canonical one, M-points do not
    raise NotImplementedError("decomposition is implemented for flower points")
