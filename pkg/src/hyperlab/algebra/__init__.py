"""Exact arithmetic: finite fields, explicit extensions, polynomials."""

from hyperlab.algebra.fields import (
    GF,
    QQ,
    ExtensionField,
    FieldAutomorphism,
    FieldElement,
    FiniteField,
    PrimeField,
    RationalField,
    field_of_order,
    frobenius,
    is_prime,
    prime_power,
)
from hyperlab.algebra.poly import (
    PolyRing,
    Polynomial,
    bareiss_determinant,
    find_irreducible,
    is_irreducible,
    monic_polynomials,
    poly_discriminant,
    poly_gcd,
    poly_powmod,
    poly_resultant,
    roots_in,
    sylvester_matrix,
)

__all__ = [
    "GF",
    "QQ",
    "ExtensionField",
    "FieldAutomorphism",
    "FieldElement",
    "FiniteField",
    "PolyRing",
    "Polynomial",
    "PrimeField",
    "RationalField",
    "bareiss_determinant",
    "field_of_order",
    "find_irreducible",
    "frobenius",
    "is_irreducible",
    "is_prime",
    "monic_polynomials",
    "poly_discriminant",
    "poly_gcd",
    "poly_powmod",
    "poly_resultant",
    "prime_power",
    "roots_in",
    "sylvester_matrix",
]
