"""Automorphism groups of smooth quartic surfaces of Picard rank 2.

Exact integer arithmetic throughout: rank-2 even lattices, the Pell
dictionary for classes of fixed square, the four-way classification of
Aut(S), generator matrices, Cremona-link factorizations, and the
exhaustion arguments behind the discriminant bound.
"""

from .exclusion import (
    admissible_discriminants,
    antiflip_exhaustion,
    antiflip_report,
    curve_list,
    rprime_list,
)
from .isometry import (
    aut_generators,
    gluing_ok,
    involution_form,
    is_isometry,
    minimal_gluing_exponent,
    minimal_quadeq_solution,
    reflection,
    torelli_ok,
)
from .lattice import GramLattice, change_basis, discriminant, pairing
from .links import catalog, compose_word, lookup, realize_generator
from .pell import fundamental_solution, has_solution, solution_class_reps, solve
from .surface import (
    CURVE_MODELS,
    AutKind,
    QuarticLattice,
    ample_square2_axes,
    canonical_bc,
    class_with_square_exists,
    classify_aut,
    curve_model,
    find_curve_class,
    forbidden_small_disc,
    genus_degree,
    is_ample,
    realizable_gd,
)
from .verify import run_all as verify_paper

__version__ = "0.1.0"

__all__ = [
    "AutKind",
    "CURVE_MODELS",
    "GramLattice",
    "QuarticLattice",
    "admissible_discriminants",
    "ample_square2_axes",
    "antiflip_exhaustion",
    "antiflip_report",
    "aut_generators",
    "canonical_bc",
    "catalog",
    "change_basis",
    "class_with_square_exists",
    "classify_aut",
    "compose_word",
    "curve_list",
    "curve_model",
    "discriminant",
    "find_curve_class",
    "forbidden_small_disc",
    "fundamental_solution",
    "genus_degree",
    "gluing_ok",
    "has_solution",
    "involution_form",
    "is_ample",
    "is_isometry",
    "lookup",
    "minimal_gluing_exponent",
    "minimal_quadeq_solution",
    "pairing",
    "realizable_gd",
    "realize_generator",
    "reflection",
    "rprime_list",
    "solution_class_reps",
    "solve",
    "torelli_ok",
    "verify_paper",
]
