"""Closed-form maximality tests for x**n - u over the rational integers.

``pure_power_exact`` characterizes maximality of Z[u**(1/n)] prime by prime:
at each p dividing n*u, either p divides u exactly once, or p does not divide
u and p divides u**p - u exactly once.  ``pure_power_sufficient`` is the
coarser squarefree/radical sufficient test.  Both sit above the general
engine and are cross-checked against it in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factor, is_perfect_power, is_prime, prime_divisors, valuation_int
from .criterion import VERDICT_MAXIMAL, VERDICT_NOT_MAXIMAL, VERDICT_UNKNOWN, local_maximality
from .intpoly import IntPoly

REASON_UNIT_VALUATION = "nu_u_not_one"
REASON_FROBENIUS_VALUATION = "frobenius_val_not_one"


@dataclass(frozen=True)
class PurePowerVerdict:
    n: int
    u: int
    verdict: str
    failing_prime: int | None = None
    reason: str | None = None


class ReduciblePolynomialError(ValueError):
    """Raised when the irreducibility screen finds an actual factorization."""


def pure_power_poly(n: int, u: int) -> IntPoly:
    return IntPoly([-u] + [0] * (n - 1) + [1])


def ensure_pure_power_irreducible(n: int, u: int) -> None:
    """Raise ReduciblePolynomialError if x**n - u is reducible over Q.

    For integer u this screen is exact: x**n - u is irreducible iff u is not
    a q-th power for any prime q dividing n and, when 4 | n, u != -4*w**4.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if u == 0:
        raise ValueError("u must be nonzero")
    for q in prime_divisors(n):
        root_exists = (
            is_perfect_power(u, q) if u > 0 else (q % 2 == 1 and is_perfect_power(-u, q))
        )
        if root_exists:
            raise ReduciblePolynomialError(
                f"x^{n} - ({u}) is reducible: {u} is a perfect {q}th power"
            )
    if n % 4 == 0 and u < 0 and (-u) % 4 == 0 and is_perfect_power((-u) // 4, 4):
        raise ReduciblePolynomialError(
            f"x^{n} - ({u}) is reducible: {u} = -4*w^4"
        )


def pure_power_sufficient(n: int, a: int) -> bool:
    """Sufficient test: a squarefree and every prime dividing n divides a.

    True implies Z[a**(1/n)] is maximal (given x**n - a irreducible); False
    is inconclusive.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if a == 0:
        raise ValueError("a must be nonzero")
    fa = factor(a)
    if not fa.complete:
        return False
    if any(e != 1 for _, e in fa.factors):
        return False
    a_primes = set(fa.prime_list())
    return all(p in a_primes for p in prime_divisors(n))


def pure_power_exact(n: int, u: int) -> PurePowerVerdict:
    """Exact maximality verdict for Z[u**(1/n)], u a nonzero integer.

    Quantifies over the primes dividing n*u: for p | u require v_p(u) = 1;
    for p | n with p not dividing u require v_p(u**p - u) = 1.  Primes away
    from n*u never divide the discriminant and need no check.
    """
    ensure_pure_power_irreducible(n, u)
    fac = factor(n * u)
    for p, _ in fac.factors:
        vu = valuation_int(u, p)
        if vu >= 1:
            if vu != 1:
                return PurePowerVerdict(n, u, VERDICT_NOT_MAXIMAL, p, REASON_UNIT_VALUATION)
        else:
            w = u**p - u
            if w == 0 or valuation_int(w, p) != 1:
                return PurePowerVerdict(
                    n, u, VERDICT_NOT_MAXIMAL, p, REASON_FROBENIUS_VALUATION
                )
    if not fac.complete:
        return PurePowerVerdict(n, u, VERDICT_UNKNOWN)
    return PurePowerVerdict(n, u, VERDICT_MAXIMAL)


def frobenius_exponent_flexibility(
    n: int, u: int, p: int, r_max: int, seed: int = 0
) -> bool:
    """Any Frobenius exponent certifying valuation 1 must match the engine.

    Scans r = 1..r_max; if some r gives v_p(u**(p**r) - u) = 1, the engine's
    local verdict for x**n - u at p has to be maximal.  Returns True when the
    implication holds (vacuously if no r qualifies).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if u == 0:
        raise ValueError("u must be nonzero")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n % p != 0:
        raise ValueError(f"{p} must divide n")
    if u % p == 0:
        raise ValueError(f"{p} must not divide u")
    if r_max < 1:
        raise ValueError("r_max must be positive")
    witnessed = False
    for r in range(1, r_max + 1):
        w = u ** (p**r) - u
        if w != 0 and valuation_int(w, p) == 1:
            witnessed = True
            break
    if not witnessed:
        return True
    return local_maximality(pure_power_poly(n, u), p, seed).locally_maximal
