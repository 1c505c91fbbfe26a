"""dedcrit: is the order generated by a polynomial root integrally closed?

Given a monic irreducible f over Z (or a quadratic ring of integers), decide
whether Z[alpha] is the full ring of integers of Q(alpha) for a root alpha,
by checking remainder valuations of the repeated factors of f mod p at every
prime whose square divides disc(f).  Ships pure-power shortcuts, quadratic
base rings, Eisenstein recognizers, an independent classical oracle, and a
CLI emitting machine-readable certificates.
"""

from .arith import (
    PrimeFactorization,
    factor,
    integer_kth_root,
    is_perfect_power,
    is_prime,
    jacobi,
    prime_divisors,
    small_primes,
    valuation_int,
)
from .criterion import (
    Certificate,
    FactorEvidence,
    LocalReport,
    VERDICT_MAXIMAL,
    VERDICT_NOT_MAXIMAL,
    VERDICT_UNKNOWN,
    certificate_to_dict,
    certificate_to_json,
    classical_dedekind_oracle,
    is_maximal_global,
    lift_stability_check,
    local_maximality,
)
from .eisenstein import (
    PowerBasisElement,
    is_eisenstein_at,
    is_eisenstein_wrt,
    power_basis_generator,
)
from .fppoly import (
    FactorizationModP,
    FpPoly,
    factor_mod_p,
    fp_gcd,
    is_irreducible_mod_p,
    lift_centered,
    reduce_mod_p,
)
from .intpoly import (
    IntPoly,
    PolyParseError,
    cyclotomic_prime_power,
    discriminant,
    gauss_valuation,
    monic_divmod,
    parse_poly,
    phi_adic_expansion,
    resultant,
)
from .purepower import (
    PurePowerVerdict,
    ReduciblePolynomialError,
    ensure_pure_power_irreducible,
    frobenius_exponent_flexibility,
    pure_power_exact,
    pure_power_poly,
    pure_power_sufficient,
)
from .quadratic import (
    QuadField,
    QuadInt,
    QuadPowerVerdict,
    QuadPrime,
    ReducibleOverFieldError,
    kronecker,
    parse_quadint,
    prime_valuation,
    pure_power_check,
    qth_root_in_field,
    quadint_from_json,
    split_prime,
    sweep_pure_powers,
)

__version__ = "0.1.0"
