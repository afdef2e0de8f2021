"""Wide subcategories of representation-finite quiver algebras.

The library enumerates the indecomposable modules of a bound quiver algebra
over an exact field, computes support tau-rigid objects and the reduction
bijection between them, materializes the category whose objects are wide
subcategories and whose morphisms are indexed by support tau-rigid objects,
relates its factorizations to signed exceptional sequences, and verifies the
underlying structural theorems exhaustively at desk scale.

Typical use:

    from widecat import build_algebra, context_for, parse_algebra_file
    from widecat import WideCategory, run_verify

    alg = build_algebra(parse_algebra_file("triangle.alg"))
    ctx = context_for(alg)
    cat = WideCategory(ctx)
    reports = run_verify(ctx)
"""
from .algebra import Algebra, QuiverPresentation, build_algebra
from .arquiver import (AlmostSplitSequence, ARQuiver, almost_split_sequence,
                       ar_quiver_dot, ar_quiver_json, build_ar_quiver)
from .category import (WideCategory, WideCatMorphism, category_dot,
                       category_json, enumerate_wide_subcategories,
                       identity_of, morphism)
from .context import Context, DEFAULT_BUDGET, build_context
from .errors import (AlgebraMismatch, BudgetExceeded, CacheCorrupt,
                     CaseDispatchError, DecompositionFailure,
                     InconsistentRelation, InputError, IoError, NonAdmissible,
                     NotComposable, NotCompatible, NotExceptional,
                     NotFiniteDimensional, NotInImage, NotSupportTauRigid,
                     ParseError, UnknownVertex, WidecatError)
from .fields import QQ, FieldError, FieldSpec, field_from_name
from .homology import (Presentation, TwoTermComplex, ar_translate,
                       ar_translate_inverse, ext1_dim, minimal_presentation,
                       shifted_hom_dim)
from .modules import (Module, ModuleMorphism, cokernel, direct_sum,
                      hom_basis, hom_dim, injective_module, kernel,
                      projective_module, simple_module)
from .reduction import e_map, e_table, f_map, wide_of
from .sequences import (Factorization, count_signed_sequences,
                        enumerate_signed_sequences, factorizations,
                        is_signed_tau_exceptional, ordered_strigid_objects,
                        phi, phi_inverse)
from .taurigid import (CObject, WideSubcategory, ZERO_COBJECT,
                       bongartz_complement, ext_projective_ids,
                       full_subcategory, is_support_tau_rigid,
                       split_projective_part, stilting_objects,
                       strigid_objects, wide_rank)
from .textio import (context_for, module_from_json, module_to_json,
                     parse_algebra_file, parse_algebra_text)
from .verify import SUITE_NAMES, VerificationReport, run_suite, run_verify

__version__ = "0.1.0"

__all__ = [
    "Algebra", "QuiverPresentation", "build_algebra",
    "AlmostSplitSequence", "ARQuiver", "almost_split_sequence",
    "ar_quiver_dot", "ar_quiver_json", "build_ar_quiver",
    "WideCategory", "WideCatMorphism", "category_dot", "category_json",
    "enumerate_wide_subcategories", "identity_of", "morphism",
    "Context", "DEFAULT_BUDGET", "build_context",
    "AlgebraMismatch", "BudgetExceeded", "CacheCorrupt", "CaseDispatchError",
    "DecompositionFailure", "InconsistentRelation", "InputError", "IoError",
    "NonAdmissible", "NotComposable", "NotCompatible", "NotExceptional",
    "NotFiniteDimensional", "NotInImage", "NotSupportTauRigid", "ParseError",
    "UnknownVertex", "WidecatError",
    "QQ", "FieldError", "FieldSpec", "field_from_name",
    "Presentation", "TwoTermComplex", "ar_translate", "ar_translate_inverse",
    "ext1_dim", "minimal_presentation", "shifted_hom_dim",
    "Module", "ModuleMorphism", "cokernel", "direct_sum", "hom_basis",
    "hom_dim", "injective_module", "kernel", "projective_module",
    "simple_module",
    "e_map", "e_table", "f_map", "wide_of",
    "Factorization", "count_signed_sequences", "enumerate_signed_sequences",
    "factorizations", "is_signed_tau_exceptional", "ordered_strigid_objects",
    "phi", "phi_inverse",
    "CObject", "WideSubcategory", "ZERO_COBJECT", "bongartz_complement",
    "ext_projective_ids", "full_subcategory", "is_support_tau_rigid",
    "split_projective_part", "stilting_objects", "strigid_objects",
    "wide_rank",
    "context_for", "module_from_json", "module_to_json",
    "parse_algebra_file", "parse_algebra_text",
    "SUITE_NAMES", "VerificationReport", "run_suite", "run_verify",
    "__version__",
]
