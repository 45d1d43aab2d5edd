"""Exact invariants, inverse polynomials and structure certificates for
numerical semigroup rings."""

__version__ = "0.1.0"

from .bresinsky import (
    AlphaTable,
    FourGorensteinCertificate,
    PfaffianStructure,
    TwoFactorizationWitness,
    alpha_table,
    pfaffian_structure,
    two_factorization_witness,
    verify_4gor,
)
from .errors import DomainError, InvsemiError, TheoremViolation
from .factorization import (
    BinomialIdealPresentation,
    deg_h,
    denumerant,
    factorizations,
    has_unique_factorization,
    minimal_generators,
    mu_modulo,
)
from .gluing import (
    GlueResult,
    GluingSpec,
    find_gluing_decompositions,
    glue,
    glued_inverse_polynomial,
    glued_monomial_check,
    symmetric_extension_test,
)
from .invpoly import (
    AnnihilatorPresentation,
    InversePolynomial,
    annihilator_general,
    annihilator_of_semigroup_J,
    check_AS,
    contract,
    contract_monomial,
    inverse_polynomial,
    verify_intersection_theorem,
)
from .semigroup import (
    AperySet,
    NumericalSemigroup,
    SemigroupInvariants,
    iter_semigroups,
    iter_symmetric_semigroups,
)
from .structure import (
    FreenessWitness,
    HecResult,
    ShapeTag,
    ci_same_degree,
    classify_small_multiplicity,
    construct_from_alphas,
    construct_H_ec,
    is_free,
    monomial_criterion,
)

__all__ = [
    "AlphaTable",
    "AnnihilatorPresentation",
    "AperySet",
    "BinomialIdealPresentation",
    "DomainError",
    "FourGorensteinCertificate",
    "FreenessWitness",
    "GlueResult",
    "GluingSpec",
    "HecResult",
    "InversePolynomial",
    "InvsemiError",
    "NumericalSemigroup",
    "PfaffianStructure",
    "SemigroupInvariants",
    "ShapeTag",
    "TheoremViolation",
    "TwoFactorizationWitness",
    "alpha_table",
    "annihilator_general",
    "annihilator_of_semigroup_J",
    "check_AS",
    "ci_same_degree",
    "classify_small_multiplicity",
    "construct_from_alphas",
    "construct_H_ec",
    "contract",
    "contract_monomial",
    "deg_h",
    "denumerant",
    "factorizations",
    "find_gluing_decompositions",
    "glue",
    "glued_inverse_polynomial",
    "glued_monomial_check",
    "has_unique_factorization",
    "inverse_polynomial",
    "is_free",
    "iter_semigroups",
    "iter_symmetric_semigroups",
    "minimal_generators",
    "monomial_criterion",
    "mu_modulo",
    "pfaffian_structure",
    "symmetric_extension_test",
    "two_factorization_witness",
    "verify_4gor",
    "verify_intersection_theorem",
]
