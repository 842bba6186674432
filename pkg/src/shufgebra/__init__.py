"""Exact shuffle-algebra calculator for the positive Yangian of sl_n.

Everything is computed exactly over Q or over an odd prime field F_p:
graded shuffle elements with canonical pole denominators, specialization
maps along Kostant partitions, rank-1 symmetric-function bases, and the
characteristic-p wheel conditions, plus a CLI that runs the identities as
named verification suites.
"""

from .fields import QQ, FieldMismatchError, PrimeField, RationalField
from .poly import (
    NotDivisibleError,
    ParseError,
    Polynomial,
    TVAR,
    coeffs_in_half_integers,
    exact_divide,
    full_permutations,
    is_symmetric,
    parse_polynomial,
    poly_str,
    symmetrize,
    wvar,
    xvar,
)
from .linalg import Matrix, linear_solve, span_rank
from .roots import (
    KostantPartition,
    PBWExponent,
    Root,
    canonical_split,
    is_p_restricted,
    kostant_partitions,
    mul_factor,
    parse_kostant_partition,
    parse_root,
    pbw_cmp,
    pbw_exponents,
    positive_roots,
    size_lex_key,
)
from .shuffle import (
    ShuffleElement,
    ZetaFactor,
    bracket,
    bracket_root_vector,
    cartan,
    check_wheel,
    divided_power_image,
    enumerate_shuffles,
    generator_image,
    pbw_monomial_image,
    root_vector_image,
    shuffle_mul,
    verify_relations,
    zeta,
)
from .specialize import (
    SpecializedPoly,
    check_wheel_p,
    cross_group_factor,
    expected_factorization,
    group_factor,
    in_wheel_p_subalgebra,
    shifted_hall_littlewood,
    specialize,
    specialize_reduced,
    verify_factorization,
    verify_vanishing,
)
from .rank1 import (
    NotInImageError,
    SymPoly,
    dim_check,
    drop_variable,
    expand_hall_littlewood,
    expand_monomial,
    express_p_restricted,
    hall_littlewood,
    monomial_sym,
    restricted_partition_count,
    staircase_evaluate,
    wheel_p_vanishes,
)
from .report import CaseResult, SuiteReport

__version__ = "0.1.0"
