"""Exact-arithmetic toolkit for p-adic liminality of two-bridge knot groups.

The package computes, with no floating point anywhere, the residue
criteria deciding when a two-bridge knot group admits a liminal
SL2(Z_p) character, constructs the p-adic points behind the positive
cases, and verifies the companion statements about Lucas-type sequences
and cyclic branched cover homology at desk scale.
"""

from .numtheory import (
    DomainError,
    Factorization,
    IncompleteFactorizationError,
    factorize,
    is_prime,
    jacobi,
    legendre,
    primes_up_to,
    sqrt_mod_p,
    square_free_part,
)
from .polynomials import (
    BiPoly,
    UniPoly,
    compose_uni_into_bi,
    reduce_mod_p,
    resultant,
    roots_mod_p,
    t_power_minus_one,
)
from .padic import (
    HenselError,
    PAdicInt,
    PAdicSeries,
    hensel_lift_root,
    implicit_series,
    minimal_sqrt_mod_prime_power,
    padic_sqrt,
    padic_sqrt_exists,
)
from .knots import (
    ConstructionError,
    DoubleTwistKnot,
    SymbolicMatrix,
    TwoBridgeKnot,
    alexander_double_twist,
    alexander_matches,
    chebyshev_S,
    fox_alexander,
    intersection_x_squared,
    parse_knot,
    resolve_by_alexander,
    resolve_named_knot,
    riley_polynomial,
    riley_polynomial_general,
    trace_z,
    word_signs,
)
from .liminal import (
    GeneralCriterion,
    LiminalVerdict,
    Reason,
    construct_liminal_character,
    general_criterion,
    liminal_character_exists,
    liminal_representation_exists,
)
from .sequences import (
    DivisorConstraintReport,
    Mod8Row,
    fib_F,
    lucas_L,
    lucas_table,
    mod8_row,
    star_identity_holds,
    theorem5_verify,
)
from .covers import (
    CounterexampleReport,
    CoverRecord,
    EvenCoverIdentity,
    Remark64Report,
    counterexample_scan,
    h1_is_finite,
    r_n,
    r_n_even_oracle,
    r_n_odd_oracle,
    remark64_scan,
    verify_main_theorem,
)

__version__ = "0.1.0"
