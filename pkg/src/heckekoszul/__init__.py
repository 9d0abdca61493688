"""Exact symbolic arithmetic for extended affine Hecke algebras in the
Bernstein presentation, the Iwahori-Matsumoto and sign involutions with their
composite, a formal K-class dictionary calculus for the two Steinberg-type
realizations, and a chain-level linear Koszul duality engine over a point.

Everything is exact: integer Laurent polynomials, integer lattice matrices,
rational linear algebra.
"""

from .rootdata import RootDatum, make_root_datum, pairing, reflect
from .weyl import WeylElt, simple, compose, descent, reduced_word, identity
from .poly import Laurent, LatticePoly, bl_sum, laurent_eval_negate_v
from .hecke import HeckeElt, gen_T, gen_theta, gen_t, scalar, unit, mul, inv_Tw, verify_relations
from .involutions import InvolutionKind, apply, check_homomorphism, check_theorem
from .kclasses import (KClass, diag_class, y_class, w_class, expand, twist,
                       kappa_im_on_classes, replay_generator_images)
from .koszul import (BigradedDgModule, DgAlgebra, DgGen, KoszulSetup,
                     kappa_point, cohomology, euler_class, dual, free_module,
                     direct_sum)
from .diagonal import (DiagonalSetup, check_diagonal, check_shift_rule,
                       check_euler_lemma, random_dg_module, run_koszul_suite)
from .exprs import parse, eval_expr, render, ParseError
from .cli import run_suite

__all__ = [
    "RootDatum", "make_root_datum", "pairing", "reflect",
    "WeylElt", "simple", "compose", "descent", "reduced_word", "identity",
    "Laurent", "LatticePoly", "bl_sum", "laurent_eval_negate_v",
    "HeckeElt", "gen_T", "gen_theta", "gen_t", "scalar", "unit", "mul",
    "inv_Tw", "verify_relations",
    "InvolutionKind", "apply", "check_homomorphism", "check_theorem",
    "KClass", "diag_class", "y_class", "w_class", "expand", "twist",
    "kappa_im_on_classes", "replay_generator_images",
    "BigradedDgModule", "DgAlgebra", "DgGen", "KoszulSetup", "kappa_point",
    "cohomology", "euler_class", "dual", "free_module", "direct_sum",
    "DiagonalSetup", "check_diagonal", "check_shift_rule", "check_euler_lemma",
    "random_dg_module", "run_koszul_suite",
    "parse", "eval_expr", "render", "ParseError",
    "run_suite",
]
