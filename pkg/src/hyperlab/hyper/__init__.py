"""Hyperoperation tables, axiom checks and the factor and fraction constructions."""

from hyperlab.hyper.axioms import (
    AxiomReport,
    Violation,
    check_canonical_hypergroup,
    check_hyperring,
    x_plus_x_law,
)
from hyperlab.hyper.factor import (
    Coset,
    as_subgroup,
    build_factor_hyperfield,
    coset_representatives,
    generate_subgroup,
    subfield_criterion,
)
from hyperlab.hyper.fractions import (
    BoundedFractionTable,
    PolynomialCosets,
    build_fraction_hyperfield,
    rational_function_hypersum,
)
from hyperlab.hyper.iso import find_isomorphism, is_isomorphism
from hyperlab.hyper.table import MultiOpTable, hypersum_membership, krasner_hyperfield

__all__ = [
    "AxiomReport",
    "BoundedFractionTable",
    "Coset",
    "MultiOpTable",
    "PolynomialCosets",
    "Violation",
    "as_subgroup",
    "build_factor_hyperfield",
    "build_fraction_hyperfield",
    "check_canonical_hypergroup",
    "check_hyperring",
    "coset_representatives",
    "find_isomorphism",
    "generate_subgroup",
    "hypersum_membership",
    "is_isomorphism",
    "krasner_hyperfield",
    "rational_function_hypersum",
    "subfield_criterion",
    "x_plus_x_law",
]
