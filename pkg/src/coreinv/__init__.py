"""Exact generalized inverses of square matrices over *-rings.

Inner, {1,3}, {1,4}, group, Moore-Penrose, core and dual core inverses of
matrices over Q, Q(i) and F_p, with unit-based existence criteria and a
catalog of representation formulas; every result is certified against
its defining equations.
"""

from .criteria import THEOREMS, Facts, Verdict, existence_criteria
from .errors import (
    CoreInvError,
    DimensionMismatch,
    FieldMismatch,
    GenerationExhausted,
    MatrixFormatError,
    NonExistent,
    PremiseViolation,
    VerificationFailed,
)
from .formulas import CATALOG, Formula, apply_formula
from .inverses import (
    InnerInverseFamily,
    InverseCertificate,
    InverseKind,
    check_axioms,
    compute,
    core_inverse,
    dual_core_inverse,
    group_inverse,
    group_via_units,
    inner_inverse,
    jacobson,
    mp_inverse,
    mp_via_lemma,
    one_four,
    one_three,
    sample_inner_inverse,
)
from .matfile import format_matrix, parse_matrix, read_matrix, write_matrix
from .matrix import RankForm, StarMatrix, one_sided_invertible, rank_form, solve_linear, try_inverse
from .scalars import QI, FieldSpec, Fp, GaussianRational, PrimeFieldElement, Q, Rational, scalar_arith

__version__ = "0.1.0"

__all__ = [name for name, obj in dict(globals()).items() if not name.startswith("_") and not isinstance(obj, type(errors))]
