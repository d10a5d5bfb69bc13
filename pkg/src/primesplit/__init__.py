"""Exact arithmetic for prime splitting in number-field orders.

The library connects two factorizations: a rational prime p in the ring
of integers of a number field, and the defining polynomial modulo p.
When p does not divide the index of the chosen generator the two match
factor-for-factor; the index-divisibility criterion detects the
exceptional primes from the polynomial alone, and order/ideal
arithmetic (multiplication tables, Hermite normal form lattices)
handles them by brute force in the maximal order.
"""

from .criteria import (
    IndexDivisorError,
    IndexVerdict,
    PrimeIdealSymbol,
    SplittingShape,
    assign_prime_functions,
    common_index_divisor,
    factor_prime_via_polynomial,
    index_divisible,
)
from .fppoly import (
    FpPoly,
    PrimeModulus,
    count_monic_irreducibles,
    enumerate_monic_irreducibles,
    fp_extgcd,
    fp_factor,
    fp_gcd,
    fp_is_irreducible,
)
from .ideals import (
    LatticeIdeal,
    bracket_str,
    crt_good_generator,
    factor_p_in_order,
    hnf,
    ideal_from_generators,
    ideal_norm,
    ideal_product,
    ideal_valuation,
    principal_ideal,
    two_element_ideal,
    whole_order,
)
from .indexform import MultiPoly, common_value_divisor, index_form
from .orders import (
    Order,
    OrderElement,
    char_poly,
    cubic_family,
    element_index,
    element_mul,
    element_norm,
    element_trace,
    maximal_order,
    order_discriminant,
    order_from_polynomial,
    p_enlarge,
)
from .zpoly import ZPoly, cofactor_m, discriminant, lift, reduce_mod, resultant

__version__ = "0.1.0"

__all__ = [
    "FpPoly",
    "IndexDivisorError",
    "IndexVerdict",
    "LatticeIdeal",
    "MultiPoly",
    "Order",
    "OrderElement",
    "PrimeIdealSymbol",
    "PrimeModulus",
    "SplittingShape",
    "ZPoly",
    "assign_prime_functions",
    "bracket_str",
    "char_poly",
    "cofactor_m",
    "common_index_divisor",
    "common_value_divisor",
    "count_monic_irreducibles",
    "crt_good_generator",
    "cubic_family",
    "discriminant",
    "element_index",
    "element_mul",
    "element_norm",
    "element_trace",
    "enumerate_monic_irreducibles",
    "factor_p_in_order",
    "factor_prime_via_polynomial",
    "fp_extgcd",
    "fp_factor",
    "fp_gcd",
    "fp_is_irreducible",
    "hnf",
    "ideal_from_generators",
    "ideal_norm",
    "ideal_product",
    "ideal_valuation",
    "index_divisible",
    "index_form",
    "lift",
    "maximal_order",
    "order_discriminant",
    "order_from_polynomial",
    "p_enlarge",
    "principal_ideal",
    "reduce_mod",
    "resultant",
    "two_element_ideal",
    "whole_order",
]
