"""Frobenius-theoretic invariants of quotients of polynomial rings over F_p.

The package computes bracket powers, e-th root ideals, Cartier/trace maps,
Fedder-style surjectivity checks, compatible ideals and test ideals, with a
complete combinatorial fast path for Stanley-Reisner rings and a session-file
command line front end.
"""

from .ring import (
    EXPONENT_LIMIT,
    ExponentOverflowError,
    MonomialOrder,
    ParseError,
    Polynomial,
    RingContext,
    is_prime,
    order_from_tag,
    parse_polynomial,
)
from .groebner import (
    Ideal,
    buchberger,
    colon_element,
    colon_ideal,
    dedupe_ideals,
    ideal_intersect,
    ideal_sum,
    ideals_equal,
    is_groebner_basis,
    normal_form,
    s_polynomial,
)
from .frobenius import (
    CartierMap,
    FedderReport,
    bracket_power,
    cartier_trace,
    eth_root,
    fedder_check,
    is_compatible,
    is_compatible_bracket,
    stable_closure,
)
from .simplicial import (
    CompatiblePrimesReport,
    EnumerationCapExceeded,
    FVectorReport,
    SimplicialComplex,
    bracket_colon,
    complex_from_ideal,
    compatible_primes,
    default_cartier,
    f_report,
    ideal_from_complex,
    primary_decomposition,
    test_ideal,
    tightness_bound,
    variable_ideal,
)
from .quotient import (
    InhomogeneousIdealError,
    QuotientIdeal,
    equal_mod,
    find_positive_weight,
    image_mod,
    minimal_generators,
)

__all__ = [name for name in dir() if not name.startswith("_")]
