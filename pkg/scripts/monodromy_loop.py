#!/usr/bin/env python3
"""Transport joint eigenlines around a loop exchanging two marked points.

Follows the inhomogeneous sl2 family on V(1) x V(1) while z1 and z2 trade
places along a circle in the complex plane, and prints the induced
permutation of the joint eigenlines at several step counts.
"""

import argparse

import numpy as np

from gaudin.liealg import build_sl
from gaudin.reps import Irrep, TensorRep
from gaudin.spectra import (CommutingFamily, inhom_matrices,
                            monodromy_permutation)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=float, default=1.0)
    ap.add_argument("--chi", type=float, default=1.0)
    ap.add_argument("--steps", default="8,16,32")
    args = ap.parse_args()

    L = build_sl(2)
    V = TensorRep([Irrep(L, (1,)), Irrep(L, (1,))])

    def family(t):
        w = args.radius * np.exp(1j * np.pi * float(t))
        return CommutingFamily(inhom_matrices(L, V, [-w, w], [args.chi]))

    for steps in (int(s) for s in args.steps.split(",")):
        perm = monodromy_permutation(family, steps=steps)
        sq = [perm[perm[k]] for k in range(len(perm))]
        print(f"steps {steps:3d}: permutation = {perm},  "
              f"squares to identity = {sq == list(range(len(perm)))}")


if __name__ == "__main__":
    main()
