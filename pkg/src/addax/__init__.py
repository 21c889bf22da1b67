"""Exact computations for additive actions on projective hypersurfaces.

A local algebra ``R`` with a generating hyperplane ``W`` of its maximal
ideal determines a hypersurface in ``P(R)`` with an open orbit of the vector
group ``W``.  This package builds the invariant form, the equation, the
action and, for quadrics, the canonical form, all over Q(i).
"""

from ._kernels import BACKEND
from .scalar import I, ONE, ZERO, NotRepresentable, Scalar, parse_scalar, render_scalar
from .algebra import (AlgebraError, LocalAlgebra, PairError, PointedPair, ValidationReport,
                      change_basis, degree, generates, ideal_filtration, largest_ideal_in,
                      load_json, loads_json, quotient, quotient_pair, validate_algebra)
from .catalog import catalog, catalog_names, standard_pairs
from .poly import HomPoly, Poly, parse_poly
from .multilinear import (SymForm, build_FW, check_invariance, evaluate_form,
                          form_to_polynomial, hypersurface_equation, is_invariant_form,
                          polarize)
from .action import ProjPoint, act, exp_element, rho, singular_at, verify_action_invariance
from .classify import (BilinearTriple, ChangeOfBasis, LambdaData, canonicalize_nondegenerate,
                       classify_corank_one, extract_lambda, gram_matrix, j_invariant_n4,
                       lambda_equivalent)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "I",
    "ONE",
    "ZERO",
    "NotRepresentable",
    "Scalar",
    "parse_scalar",
    "render_scalar",
    "AlgebraError",
    "LocalAlgebra",
    "PairError",
    "PointedPair",
    "ValidationReport",
    "change_basis",
    "degree",
    "generates",
    "ideal_filtration",
    "largest_ideal_in",
    "load_json",
    "loads_json",
    "quotient",
    "quotient_pair",
    "validate_algebra",
    "catalog",
    "catalog_names",
    "standard_pairs",
    "HomPoly",
    "Poly",
    "parse_poly",
    "SymForm",
    "build_FW",
    "check_invariance",
    "evaluate_form",
    "form_to_polynomial",
    "hypersurface_equation",
    "is_invariant_form",
    "polarize",
    "ProjPoint",
    "act",
    "exp_element",
    "rho",
    "singular_at",
    "verify_action_invariance",
    "BilinearTriple",
    "ChangeOfBasis",
    "LambdaData",
    "canonicalize_nondegenerate",
    "classify_corank_one",
    "extract_lambda",
    "gram_matrix",
    "j_invariant_n4",
    "lambda_equivalent",
]
