#!/usr/bin/env python3
"""Watch the interpolating family collapse onto the inhomogeneous model.

Builds the quadratic span of the one-parameter family for a random rational
configuration, computes its exact eps -> 0 limit, and compares it with the
span of the inhomogeneous Hamiltonians.
"""

import argparse
import random
from fractions import Fraction

from gaudin.gaudin import interior_span, span_limit_eps0
from gaudin.liealg import CartanVector, build_sl, is_regular


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rank", type=int, default=1, help="rank of sl(rank+1)")
    ap.add_argument("--points", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    L = build_sl(args.rank + 1)
    rng = random.Random(args.seed)
    z = []
    while len(z) < args.points:
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
        if c != 0 and c not in z:
            z.append(c)
    while True:
        chi = CartanVector(
            tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                  for _ in range(L.rank)), role="chi")
        if is_regular(chi, L):
            break

    print(f"algebra: sl{args.rank + 1},  z = {[str(c) for c in z]},  "
          f"chi = {[str(c) for c in chi.coords]}")
    fam = interior_span("family", L, z, chi=chi)
    print(f"family span dimension over the function field: {fam.dim}")
    lim = span_limit_eps0(fam)
    inh = interior_span("inhomogeneous", L, z, chi=chi)
    print(f"limit dimension: {lim.dim},  inhomogeneous dimension: {inh.dim}")
    print(f"limit equals the inhomogeneous span: {lim == inh}")


if __name__ == "__main__":
    main()
