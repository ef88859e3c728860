"""Hypersimplex invariants, each computed by two independent routes.

Toric h-vectors of dual hypersimplices (recursion on the face lattice vs
closed formula), Chow-Betti numbers of hypersimplex normal fans (nullity of
the balancing system vs closed formula), and coordinator numbers of dual
type-A lattices (breadth-first search vs closed formula).
"""

from .chow import (ConePair, ConeSet, MinkowskiWeight, balancing_matrix,
                   basis_weight, chow_betti_formula, chow_betti_oracle,
                   enumerate_cones, verify_basis)
from .exact_linalg import (IntPolynomial, RationalMatrix, binomial,
                           poly_substitute_x_minus_1, rank_exact, rank_mod_p,
                           set_inclusion_matrix)
from .face_lattice import (EulerianPoset, NotEulerianError, dualize, f_vector,
                           hypersimplex_face_poset, is_eulerian,
                           lower_interval, poset_debug_json)
from .growth import (CoordinationSequence, LatticeClass,
                     coordination_sequence, coordinator_formula,
                     coordinator_from_sequence, generators)
from .toric_h import (toric_g_poly, toric_h_formula, toric_h_poly,
                      usual_h_from_f)
from .verify import run_verification

__version__ = "0.1.0"

__all__ = [
    "ConePair", "ConeSet", "MinkowskiWeight", "balancing_matrix",
    "basis_weight", "chow_betti_formula", "chow_betti_oracle",
    "enumerate_cones", "verify_basis",
    "IntPolynomial", "RationalMatrix", "binomial",
    "poly_substitute_x_minus_1", "rank_exact", "rank_mod_p",
    "set_inclusion_matrix",
    "EulerianPoset", "NotEulerianError", "dualize", "f_vector",
    "hypersimplex_face_poset", "is_eulerian", "lower_interval",
    "poset_debug_json",
    "CoordinationSequence", "LatticeClass", "coordination_sequence",
    "coordinator_formula", "coordinator_from_sequence", "generators",
    "toric_g_poly", "toric_h_formula", "toric_h_poly", "usual_h_from_f",
    "run_verification",
    "__version__",
]
