"""Eisenstein-type recognizers and the scaled power-basis generator."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import is_prime
from .fppoly import is_irreducible_mod_p, reduce_mod_p
from .intpoly import IntPoly, gauss_valuation, phi_adic_expansion


def is_eisenstein_at(f: IntPoly, p: int) -> bool:
    """True iff every non-leading coefficient of f is divisible by p and the
    constant term exactly once."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.is_zero() or not f.is_monic():
        raise ValueError("Eisenstein test requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("Eisenstein test requires a nonconstant polynomial")
    cs = f.coeffs
    if any(cs[i] % p for i in range(1, f.degree)):
        return False
    a0 = cs[0]
    return a0 % p == 0 and a0 % (p * p) != 0


def is_eisenstein_wrt(f: IntPoly, phi: IntPoly, p: int) -> bool:
    """Eisenstein condition on the phi-adic digits of f.

    Requires phi monic with irreducible reduction mod p and f congruent to a
    power of phi mod p (both checked, violations raise).  Returns True iff
    every interior digit has positive valuation and the last digit has
    valuation exactly 1.  With phi = x this is the plain Eisenstein test.
    """
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.is_zero() or not f.is_monic():
        raise ValueError("f must be monic")
    if phi.is_zero() or not phi.is_monic():
        raise ValueError("phi must be monic")
    if phi.degree < 1:
        raise ValueError("phi must be nonconstant")
    phibar = reduce_mod_p(phi, p)
    if not is_irreducible_mod_p(phibar):
        raise ValueError(f"phi is not irreducible modulo {p}")
    length, rem = divmod(f.degree, phi.degree)
    fbar = reduce_mod_p(f, p)
    if rem != 0 or length < 1 or fbar != phibar**length:
        raise ValueError(f"f is not a power of phi modulo {p}")
    digits = phi_adic_expansion(f, phi)
    for a in digits[1:-1]:
        if not a.is_zero() and gauss_valuation(a, p) < 1:
            return False
    last = digits[-1]
    return (not last.is_zero()) and gauss_valuation(last, p) == 1


@dataclass(frozen=True)
class PowerBasisElement:
    """Describes theta = alpha**s / p**t for a root alpha of x**n + a with
    valuation(a) = m coprime to n; the defining identity is m*s - n*t = 1."""

    n: int
    m: int
    s: int
    t: int
    p: int

    @property
    def description(self) -> str:
        return f"theta = alpha^{self.s} / {self.p}^{self.t}"


def power_basis_generator(n: int, m: int, p: int) -> PowerBasisElement:
    """Canonical (s, t) with m*s - n*t = 1 and 0 <= s < n.

    theta = alpha**s / p**t then satisfies valuation(theta**n) = m*s - n*t = 1,
    so x**n - theta**n is Eisenstein at p; the identity is verified here by
    plain integer arithmetic, no root extraction.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if m < 1:
        raise ValueError("m must be positive")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if math.gcd(m, n) != 1:
        raise ValueError(f"m and n must be coprime, got gcd({m}, {n}) != 1")
    s = pow(m, -1, n)
    t = (m * s - 1) // n
    if m * s - n * t != 1:
        raise AssertionError("extended gcd identity failed")
    return PowerBasisElement(n, m, s, t, p)
