"""Command-line surface: verification suites, spectra and monodromy runs,
moduli utilities and span limits, with machine-readable JSON/CSV output.

Exit codes: 0 all checks pass, 1 an assertion failed, 2 malformed input.
Exact rationals travel as strings "p/q"; floats are IEEE doubles in the
default shortest round-trip decimal form.  Output keys are sorted so that
reports are byte-stable for a fixed seed.
"""
from __future__ import annotations

import cmath
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import click
import numpy as np

from .arith import EPS, RatFunc, Tolerance, rat
from .errors import (ChartNotFound, CoincidentPoints, FormNotPositive,
                     NonRegularChi, RankDrop, SpectrumCollision,
                     UnstableConfiguration, ZeroPoint)
from .gaudin import hamiltonians, interior_span, span_limit_eps0, span_of
from .holonomy import HolonomyAlgebra, q_of_points, reconstruct_coordinates
from .liealg import CartanVector, build_sl
from .moduli import (ModuliPoint, boundary_from_components, chart_membership,
                     decompose_boundary, interior_forest,
                     point_from_marked_points, validate)
from .reps import (Irrep, TensorRep, TruncatedVerma, matrix_on_subspace,
                   pi_theta, singular_vectors, tensor_standard_form)
from .spectra import (CommutingFamily, circle_point, compact_trig_theta,
                      inhom_matrices, is_cyclic, is_normal_family,
                      joint_eigenbasis, matrices_for, monodromy_permutation,
                      trig_matrices)

INPUT_ERRORS = (CoincidentPoints, ZeroPoint, NonRegularChi, ChartNotFound,
                UnstableConfiguration, FormNotPositive, KeyError, ValueError)


# ---------------------------------------------------------------------------
# parsing / serialization helpers
# ---------------------------------------------------------------------------

def parse_rat(s) -> Fraction:
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s))


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat_list(s) -> List[Fraction]:
    if isinstance(s, str):
        parts = [p for p in s.split(",") if p.strip()]
    else:
        parts = s
    return [parse_rat(p) for p in parts]


def build_algebra(lie_type: str):
    if not (len(lie_type) == 2 and lie_type[0] == "A"
            and lie_type[1].isdigit()):
        raise ValueError(f"unsupported lie_type {lie_type!r} (expected A1..A4)")
    r = int(lie_type[1])
    if not 1 <= r <= 4:
        raise ValueError("rank must be between 1 and 4")
    return build_sl(r + 1)


def emit(data: dict, out: Optional[str], fmt: str) -> None:
    if fmt == "json":
        text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        table = data.get("eigenvalue_rows", [])
        for row in table:
            writer.writerow(row)
        text = buf.getvalue()
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def load_spec(path: Optional[str]) -> dict:
    if path is None:
        return {}
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("spec file must contain a JSON object")
    return data


def make_tolerance(tol_abs: Optional[float], tol_rel: Optional[float]) -> Tolerance:
    kw = {}
    if tol_abs is not None:
        kw["absolute"] = tol_abs
    if tol_rel is not None:
        kw["relative"] = tol_rel
    return Tolerance(**kw)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def _random_distinct(rng: random.Random, n: int, nonzero: bool = False
                     ) -> List[Fraction]:
    out: List[Fraction] = []
    while len(out) < n:
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if c in out or (nonzero and c == 0):
            continue
        out.append(c)
    return out


def suite_commutativity(seed: int) -> List[dict]:
    rng = random.Random(seed)
    L = build_sl(2)
    res = []
    z = _random_distinct(rng, 3, nonzero=True)
    theta = CartanVector((Fraction(5, 2),), role="weight")
    chi = CartanVector((Fraction(1),), role="chi")
    for kind, kw in [("homogeneous", {}),
                     ("trigonometric", {"theta": theta}),
                     ("inhomogeneous", {"chi": chi}),
                     ("dynamical", {"chi": chi})]:
        hs = hamiltonians(kind, L, z, check=False, **kw)
        res.append({"name": f"{kind} Hamiltonians pairwise commute",
                    "ok": hs.pairwise_commute()})
    return res


def suite_moduli(seed: int, samples: int = 50, n: int = 4) -> List[dict]:
    rng = random.Random(seed)
    ok_roundtrip = True
    ok_chart = True
    forest = interior_forest(n, "F")
    for _ in range(samples):
        z = _random_distinct(rng, n)
        pt = point_from_marked_points("F", z)
        rep = validate(pt)
        back = ModuliPoint.from_json(pt.to_json())
        ok_roundtrip &= rep["ok"] and back.nu == pt.nu and back.mu == pt.mu
        member, _vals = chart_membership(pt, forest)
        ok_chart &= bool(member)
    asm = {"kind": "flower", "petals": [
        {"offset": Fraction(0), "collapsed": False,
         "points": [(Fraction(0), 1), (Fraction(1), 2)]},
        {"offset": Fraction(1), "collapsed": False,
         "points": [(Fraction(0), 3), (Fraction(2), 4)]}]}
    pt = boundary_from_components(asm, "F")
    dec = decompose_boundary(pt)
    ok_boundary = (validate(pt)["ok"]
                   and [sorted(l for _, l in p["points"])
                        for p in dec["petals"]] == [[1, 2], [3, 4]])
    return [{"name": "interior points validate and roundtrip JSON",
             "ok": ok_roundtrip},
            {"name": "interior points lie in the caterpillar chart",
             "ok": ok_chart},
            {"name": "boundary assembly decomposes back to its petals",
             "ok": ok_boundary}]


def suite_holonomy(seed: int) -> List[dict]:
    rng = random.Random(seed)
    res = []
    from .arith import P1Value
    H = HolonomyAlgebra("r_n", 3)
    z = _random_distinct(rng, 3)
    Q = q_of_points(H, z)
    rec = reconstruct_coordinates(Q)["nu"]
    ok = all(rec[(i, j)] == P1Value.of(Fraction(1) / (z[i - 1] - z[j - 1]))
             for i in range(1, 4) for j in range(1, 4) if i != j)
    res.append({"name": "point coordinates reconstruct from the span",
                "ok": ok})
    return res


def suite_psi(seed: int) -> List[dict]:
    rng = random.Random(seed)
    L = build_sl(2)
    ok = True
    for _ in range(3):
        z = _random_distinct(rng, 2, nonzero=True)
        theta = CartanVector((Fraction(rng.randint(1, 9), 2),), role="weight")
        hs = hamiltonians("trigonometric", L, z, theta=theta, check=True)
        ok &= hs.pairwise_commute()
    return [{"name": "psi_reduce(H_i) == H_trig", "ok": ok}]


def suite_degeneration(seed: int) -> List[dict]:
    rng = random.Random(seed)
    L = build_sl(2)
    z = _random_distinct(rng, 2, nonzero=True)
    chi = CartanVector((Fraction(1),), role="chi")
    fam = interior_span("family", L, z, chi=chi)
    lim = span_limit_eps0(fam)
    target = interior_span("inhomogeneous", L, z, chi=chi)
    return [{"name": "eps -> 0 span limit equals the inhomogeneous span",
             "ok": lim == target}]


def suite_verma(seed: int) -> List[dict]:
    from .linalg import mat_inverse, mat_mul
    from .reps import matrix_of
    L = build_sl(2)
    theta_w = (Fraction(7, 3),)
    theta = L.cartan_from_weight(theta_w)
    z = [Fraction(1), Fraction(3)]
    Vfin = TensorRep([Irrep(L, (1,)), Irrep(L, (1,))])
    W = TensorRep([TruncatedVerma(L, theta_w, 4),
                   Irrep(L, (1,)), Irrep(L, (1,))])
    hs_trig = hamiltonians("trigonometric", L, z, theta=theta, check=False)
    hom = hamiltonians("homogeneous", L, [Fraction(0)] + z, check=False)
    ok = True
    for mu in (Fraction(-2), Fraction(0), Fraction(2)):
        sing = singular_vectors(W, (mu,))
        amb = W.weight_spaces()[(mu,)]
        fin_idx = Vfin.weight_spaces()[(mu,)]
        P = [[pi_theta(W, vec).get(Vfin.basis[b], Fraction(0))
              for vec in sing] for b in fin_idx]
        Pinv = mat_inverse(P)
        for i in range(2):
            A = matrix_on_subspace(hom.elements[i + 1], W, amb, sing)
            Mfull = matrix_of(hs_trig.elements[i], Vfin)
            Mt = [[Mfull[r][c] for c in fin_idx] for r in fin_idx]
            B = mat_mul(mat_mul(Pinv, Mt), P)
            ok &= A == B
    return [{"name": "trig action matches the Verma transport", "ok": ok}]


def suite_spectra(seed: int) -> List[dict]:
    res = []
    L = build_sl(2)
    V = TensorRep([Irrep(L, (1,)), Irrep(L, (1,))])
    chi = CartanVector((Fraction(1),), role="chi")
    z = [Fraction(0), Fraction(1)]
    hs = hamiltonians("inhomogeneous", L, z, chi=chi, check=False)
    from .envelope import cartan_element
    htot = cartan_element(L, 2, 0, chi) + cartan_element(L, 2, 1, chi)
    F = CommutingFamily(matrices_for(list(hs.elements) + [htot], V))
    S = joint_eigenbasis(F)
    G = tensor_standard_form(V)
    res.append({"name": "split inhomogeneous family: simple spectrum",
                "ok": S.simple})
    res.append({"name": "split inhomogeneous family: normal operators",
                "ok": is_normal_family(F, G)})
    res.append({"name": "split inhomogeneous family: cyclic vector",
                "ok": is_cyclic(F, np.ones(V.dim))})
    zc = [circle_point(Fraction(1, 3)), circle_point(Fraction(5, 2))]
    ok_compact = True
    Gn = np.array(G, dtype=float)
    for mu_key, idx in V.weight_spaces().items():
        th = compact_trig_theta(L, mu_key, [0.7])
        mats = trig_matrices(L, V, zc, th)
        sub = [M[np.ix_(idx, idx)] for M in mats]
        ok_compact &= is_normal_family(CommutingFamily(sub),
                                       Gn[np.ix_(idx, idx)])
    res.append({"name": "compact trigonometric family: normal per weight "
                "space", "ok": ok_compact})
    return res


SUITES: Dict[str, Callable[[int], List[dict]]] = {
    "commutativity": suite_commutativity,
    "moduli": suite_moduli,
    "holonomy": suite_holonomy,
    "psi": suite_psi,
    "degeneration": suite_degeneration,
    "verma": suite_verma,
    "spectra": suite_spectra,
}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

common_options = [
    click.option("--spec", "spec_file", type=click.Path(exists=True),
                 default=None, help="JSON problem description."),
    click.option("--out", type=click.Path(), default=None),
    click.option("--format", "fmt", type=click.Choice(["json", "csv"]),
                 default="json"),
    click.option("--seed", type=int, default=0),
    click.option("--tol-abs", type=float, default=None),
    click.option("--tol-rel", type=float, default=None),
    click.option("--threads", type=int, default=1),
]


def add_options(opts):
    def wrap(fn):
        for opt in reversed(opts):
            fn = opt(fn)
        return fn
    return wrap


@click.group()
def main() -> None:
    """Exact Gaudin Hamiltonians, moduli charts, span limits and spectra."""


@main.command("verify")
@click.option("--suite", type=click.Choice(sorted(SUITES) + ["all"]),
              default="all")
@add_options(common_options)
def cmd_verify(suite, spec_file, out, fmt, seed, tol_abs, tol_rel, threads):
    """Run a named invariant suite and report each assertion."""
    try:
        names = sorted(SUITES) if suite == "all" else [suite]
        report = {"suite": suite, "seed": seed, "results": []}
        failed = False
        for name in names:
            t0 = time.monotonic()
            for item in SUITES[name](seed):
                item = dict(item)
                item["suite"] = name
                item["status"] = "pass" if item.pop("ok") else "fail"
                item["seconds"] = round(time.monotonic() - t0, 3)
                failed |= item["status"] == "fail"
                report["results"].append(item)
        report["passed"] = not failed
        emit(report, out, fmt)
    except INPUT_ERRORS as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)
    sys.exit(1 if failed else 0)


def _spectrum_exact(L, model, z, theta, chi, V, tol):
    kw = {}
    if model == "trigonometric":
        kw["theta"] = CartanVector(tuple(theta), role="weight")
    if model in ("inhomogeneous", "dynamical"):
        kw["chi"] = CartanVector(tuple(chi), role="chi")
    hs = hamiltonians(model, L, z, check=False, **kw)
    from .envelope import cartan_element
    elements = list(hs.elements)
    for k in range(L.rank):
        ek = CartanVector(tuple(Fraction(int(t == k)) for t in range(L.rank)))
        elements.append(sum((cartan_element(L, len(z), i, ek)
                             for i in range(1, len(z))),
                            cartan_element(L, len(z), 0, ek)))
    mats = matrices_for(elements, V)
    return mats


def _per_weight_report(L, V, mats, tol, seed, form):
    Gn = np.array(form, dtype=float)
    spaces = []
    all_simple = True
    all_normal = True
    residual = 0.0
    for mu_key, idx in sorted(V.weight_spaces().items()):
        sub = [M[np.ix_(idx, idx)] for M in mats]
        F = CommutingFamily(sub, tol=tol)
        S = joint_eigenbasis(F, seed=seed)
        normal = is_normal_family(F, Gn[np.ix_(idx, idx)])
        all_simple &= S.simple
        all_normal &= normal
        residual = max(residual, S.residual_max)
        spaces.append({
            "weight": [rat_str(m) for m in mu_key],
            "dim": len(idx),
            "simple": S.simple,
            "normal": normal,
            "eigenvalues": [[repr(v) for v in row]
                            for row in S.eigenvalue_table],
        })
    return spaces, all_simple, all_normal, residual


@main.command("spectrum")
@click.option("--lie", "lie_type", default="A1")
@click.option("--model", type=click.Choice(
    ["homogeneous", "trigonometric", "inhomogeneous", "dynamical"]),
    default="inhomogeneous")
@click.option("--z", "z_str", default="0,1", help="comma-separated rationals "
              "(circle parameters with --circle)")
@click.option("--weights", default="1;1",
              help="semicolon-separated weight coordinate lists")
@click.option("--theta", "theta_str", default=None)
@click.option("--chi", "chi_str", default=None)
@click.option("--circle", is_flag=True, default=False,
              help="trigonometric model at unit-circle points with the "
              "normality-forcing theta per weight space")
@add_options(common_options)
def cmd_spectrum(lie_type, model, z_str, weights, theta_str, chi_str, circle,
                 spec_file, out, fmt, seed, tol_abs, tol_rel, threads):
    """Joint spectrum / cyclicity / normality of a Hamiltonian family."""
    try:
        spec = load_spec(spec_file)
        lie_type = spec.get("lie_type", lie_type)
        model = spec.get("model", model)
        L = build_algebra(lie_type)
        tol = make_tolerance(tol_abs, tol_rel)
        wlists = spec.get("weights") or [
            [int(c) for c in w.split(",")] for w in weights.split(";")]
        z = [parse_rat(c) for c in spec.get("points", parse_rat_list(z_str))]
        theta = [parse_rat(c) for c in spec["theta"]] if "theta" in spec \
            else (parse_rat_list(theta_str) if theta_str else None)
        chi = [parse_rat(c) for c in spec["chi"]] if "chi" in spec \
            else (parse_rat_list(chi_str) if chi_str else None)
        V = TensorRep([Irrep(L, tuple(w)) for w in wlists])
        if len(wlists) != len(z):
            raise ValueError("need one weight list per marked point")
        G = tensor_standard_form(V)
        if circle:
            if model != "trigonometric":
                raise ValueError("--circle applies to the trigonometric model")
            zc = [circle_point(t) for t in z]
            imag = [float(c) for c in (theta or [Fraction(7, 10)] * L.rank)]
            spaces = []
            all_simple = all_normal = True
            residual = 0.0
            Gn = np.array(G, dtype=float)
            for mu_key, idx in sorted(V.weight_spaces().items()):
                th = compact_trig_theta(L, mu_key, imag)
                mats = trig_matrices(L, V, zc, th)
                sub = [M[np.ix_(idx, idx)] for M in mats]
                F = CommutingFamily(sub, tol=tol)
                S = joint_eigenbasis(F, seed=seed)
                normal = is_normal_family(F, Gn[np.ix_(idx, idx)])
                all_simple &= S.simple
                all_normal &= normal
                residual = max(residual, S.residual_max)
                spaces.append({"weight": [rat_str(m) for m in mu_key],
                               "dim": len(idx), "simple": S.simple,
                               "normal": normal,
                               "eigenvalues": [[repr(v) for v in row]
                                               for row in S.eigenvalue_table]})
            data = {"model": model, "lie_type": lie_type, "compact": True,
                    "weight_spaces": spaces, "simple": all_simple,
                    "normal": all_normal, "residual_max": residual}
            emit(data, out, fmt)
            sys.exit(0 if (all_simple and all_normal) else 1)
        famn = _spectrum_exact(L, model, z, theta, chi, V, tol)
        spaces, all_simple, all_normal, residual = _per_weight_report(
            L, V, famn, tol, seed, G)
        F = CommutingFamily(famn, tol=tol)
        cyclic = is_cyclic(F, np.ones(V.dim))
        rows = []
        for s in spaces:
            for row in s["eigenvalues"]:
                rows.append([";".join(s["weight"])] + row)
        data = {"model": model, "lie_type": lie_type,
                "points": [rat_str(c) for c in z],
                "weight_spaces": spaces, "simple": all_simple,
                "normal": all_normal, "cyclic": cyclic,
                "residual_max": residual, "eigenvalue_rows": rows}
        emit(data, out, fmt)
        sys.exit(0)
    except INPUT_ERRORS as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)


@main.command("monodromy")
@click.option("--lie", "lie_type", default="A1")
@click.option("--loop", type=click.Choice(["constant", "exchange"]),
              default="exchange")
@click.option("--steps", type=int, default=16)
@click.option("--weights", default="1;1")
@click.option("--chi", "chi_str", default="1")
@add_options(common_options)
def cmd_monodromy(lie_type, loop, steps, weights, chi_str, spec_file, out,
                  fmt, seed, tol_abs, tol_rel, threads):
    """Continue joint eigenlines along a parameter loop."""
    try:
        L = build_algebra(lie_type)
        tol = make_tolerance(tol_abs, tol_rel)
        wlists = [[int(c) for c in w.split(",")] for w in weights.split(";")]
        V = TensorRep([Irrep(L, tuple(w)) for w in wlists])
        chi = [complex(Fraction(c)) for c in chi_str.split(",")]
        n = len(wlists)
        base = [complex(2 * k) for k in range(n)]

        def at(t):
            if loop == "constant":
                z = list(base)
            else:
                c = (base[0] + base[1]) / 2
                r = (base[1] - base[0]) / 2
                w = cmath.exp(1j * cmath.pi * float(t))
                z = list(base)
                z[0] = c - r * w
                z[1] = c + r * w
            mats = inhom_matrices(L, V, z, chi)
            return CommutingFamily(mats, tol=tol)

        perm = monodromy_permutation(at, steps=steps, seed=seed)
        sq = [perm[perm[k]] for k in range(len(perm))]
        data = {"loop": loop, "steps": steps,
                "permutation": perm,
                "squares_to_identity": sq == list(range(len(perm)))}
        emit(data, out, fmt)
        sys.exit(0)
    except SpectrumCollision as exc:
        click.echo(f"error: SpectrumCollision: {exc}", err=True)
        sys.exit(1)
    except INPUT_ERRORS as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)


@main.command("moduli")
@click.option("--action", type=click.Choice(["validate", "assemble",
                                             "decompose"]),
              default="validate")
@click.option("--space", type=click.Choice(["M", "T", "F", "calF"]),
              default="F")
@click.option("--z", "z_str", default=None,
              help="comma-separated rationals (assemble from interior points)")
@click.option("--eps", "eps_str", default=None)
@add_options(common_options)
def cmd_moduli(action, space, z_str, eps_str, spec_file, out, fmt, seed,
               tol_abs, tol_rel, threads):
    """Validate, assemble or decompose compactified-parameter points."""
    try:
        spec = load_spec(spec_file)
        if action == "assemble":
            if z_str is not None:
                z = parse_rat_list(z_str)
                eps = parse_rat(eps_str) if eps_str else None
                pt = point_from_marked_points(space, z, eps)
            elif "assembly" in spec:
                pt = boundary_from_components(
                    _assembly_from_json(spec["assembly"]),
                    spec.get("space", space))
            else:
                raise ValueError("assemble needs --z or an 'assembly' entry")
            emit({"point": pt.to_json()}, out, fmt)
            sys.exit(0)
        if "point" not in spec:
            raise ValueError(f"{action} needs a 'point' entry in --spec")
        pt = ModuliPoint.from_json(spec["point"])
        if action == "validate":
            rep = validate(pt)
            data = {"valid": rep["ok"]}
            if not rep["ok"]:
                data["relation"] = rep["relation"]
                data["indices"] = list(rep["indices"])
            data["stratum"] = pt.stratum
            emit(data, out, fmt)
            sys.exit(0 if rep["ok"] else 1)
        dec = decompose_boundary(pt)
        emit({"decomposition": _assembly_to_json(dec)}, out, fmt)
        sys.exit(0)
    except INPUT_ERRORS as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)


def _assembly_from_json(a):
    if a["kind"] == "curve":
        return {"kind": "curve",
                "points": [(p if p == "inf" else parse_rat(p),
                            sub if isinstance(sub, int)
                            else _assembly_from_json(sub))
                           for p, sub in a["points"]]}
    return {"kind": "flower",
            "petals": [{"offset": parse_rat(p["offset"]),
                        "collapsed": bool(p.get("collapsed", False)),
                        "points": [(q if q == "inf" else parse_rat(q),
                                    sub if isinstance(sub, int)
                                    else _assembly_from_json(sub))
                                   for q, sub in p["points"]]}
                       for p in a["petals"]]}


def _assembly_to_json(a):
    if a["kind"] == "curve":
        return {"kind": "curve",
                "points": [[p if p == "inf" else rat_str(p),
                            sub if isinstance(sub, int)
                            else _assembly_to_json(sub)]
                           for p, sub in a["points"]]}
    return {"kind": "flower",
            "petals": [{"offset": rat_str(p["offset"]),
                        "collapsed": bool(p.get("collapsed", False)),
                        "points": [[q if q == "inf" else rat_str(q), sub]
                                   for q, sub in p["points"]]}
                       for p in a["petals"]]}


@main.command("limit")
@click.option("--lie", "lie_type", default="A1")
@click.option("--z", "z_str", default="1,2")
@click.option("--chi", "chi_str", default="1")
@add_options(common_options)
def cmd_limit(lie_type, z_str, chi_str, spec_file, out, fmt, seed, tol_abs,
              tol_rel, threads):
    """eps -> 0 limit of the interpolating family's quadratic span."""
    try:
        L = build_algebra(lie_type)
        z = parse_rat_list(z_str)
        chi = CartanVector(tuple(parse_rat_list(chi_str)), role="chi")
        fam = interior_span("family", L, z, chi=chi)
        lim = span_limit_eps0(fam)
        target = interior_span("inhomogeneous", L, z, chi=chi)
        equal = lim == target
        data = {"lie_type": lie_type, "points": [rat_str(c) for c in z],
                "family_dim": fam.dim, "limit_dim": lim.dim,
                "equals_inhomogeneous_span": equal}
        emit(data, out, fmt)
        sys.exit(0 if equal else 1)
    except RankDrop as exc:
        click.echo(f"error: RankDrop: {exc}", err=True)
        sys.exit(1)
    except INPUT_ERRORS as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    main()
