"""Exact-arithmetic derivation and verification of Tribonacci convolution
identities over the cubic field Q[x]/(x^3 - x^2 - x - 1)."""

from .field import (
    FieldElement,
    Rational,
    RootInterval,
    ZeroAtRoot,
    ZeroElement,
    add,
    c_element,
    cofactor_element,
    float_embeddings,
    inverse,
    mul,
    norm,
    norm_via_multiplication_matrix,
    sign_at_real_root,
    trace,
)
from .sequences import InitTriple, ScaledSeq, TriboSeq, binet_check, egf_rational_term, normalize_egf
from .convolution import (
    ConstantSeq,
    IndexTooSmall,
    TruncSeries,
    WeightedSeq,
    multinomial_conv,
    plain_conv,
    prop1_lhs,
    prop2_rhs,
    series_T,
    series_check_derivatives,
)
from .symmetric_identities import (
    SymParams3,
    SymParams4,
    SymParams5,
    coeffs3,
    coeffs4,
    coeffs5,
    verify_sym_identity,
)
from .derivation import (
    CPower,
    CofactorPower,
    PairSumSqPower,
    PowerFamily,
    SumCofactorConst,
    SumCofactorSqConst,
    conjecture_check,
    derive,
    derive_paper_recursive,
    family_element,
)
from .identity_catalog import (
    RangeTooLarge,
    UnknownIdentity,
    VerifyReport,
    identity_ids,
    verify,
    verify_all,
)

__version__ = "0.1.0"
