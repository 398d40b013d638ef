"""Exact-arithmetic Gaudin-model toolkit for type A.

Quadratic Hamiltonians of the homogeneous, trigonometric, inhomogeneous and
one-parameter interpolating families, compactified parameter spaces with
exact chart data, commutative quadratic spans inside holonomy Lie algebras
with Grassmannian degeneration limits, and a floating-point spectral layer
(joint diagonalization, cyclicity, normality, eigenline monodromy).
"""

__version__ = "0.1.0"

from .arith import EPS, P1Value, RatFunc, Tolerance, rat
from .liealg import CartanVector, LieAlgebraData, build_sl
from .envelope import (UEElement, casimir_element, cartan_element, commutator,
                       delta_embed, iota0_reduce, omega_pair, psi_reduce)
from .reps import (Irrep, TensorRep, TruncatedVerma, matrix_of,
                   matrix_on_subspace, pi_theta, singular_vectors,
                   standard_form, tensor_standard_form)
from .moduli import (ModuliPoint, PlanarBinaryForest, boundary_from_components,
                     chart_membership, decompose_boundary, interior_forest,
                     point_from_family, point_from_marked_points, validate)
from .holonomy import (GradedSubspace, HolonomyAlgebra, gamma_map, q_of_curve,
                       q_of_points, reconstruct_coordinates)
from .gaudin import (HamiltonianSet, QuadraticSpan, forest_for, hamiltonians,
                     interior_span, iota0_span, quad_span, span_limit_eps0,
                     span_of)
from .spectra import (CommutingFamily, JointSpectrum, circle_point,
                      compact_trig_theta, is_cyclic, is_normal_family,
                      joint_eigenbasis, matrices_for, monodromy_permutation,
                      simple_spectrum_exact, trig_matrices)
