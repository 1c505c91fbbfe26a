"""Exact integer arithmetic: primality, factorization, p-adic valuations.

Everything here is deterministic.  Miller-Rabin runs with a fixed witness set
that is provably correct below 2**64 and falls back to Baillie-PSW above it;
Pollard rho derives its parameters from the number being factored, so repeated
runs produce identical factorizations.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from functools import lru_cache

TRIAL_DIVISION_BOUND = 10**6

# Deterministic for all n < 2**64 (Sinclair's witness set).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TINY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class PrimeFactorization:
    """A factored nonzero integer.

    ``sign * prod(p**e) * cofactor`` reconstructs the input exactly.  The
    cofactor is 1 unless some composite part resisted factorization, in which
    case ``complete`` is False and the cofactor records it; callers that need
    soundness must refuse to certify from an incomplete factorization.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1
    complete: bool = True

    def reconstruct(self) -> int:
        n = self.sign * self.cofactor
        for p, e in self.factors:
            n *= p**e
        return n

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def prime_list(self) -> list[int]:
        return [p for p, _ in self.factors]


@lru_cache(maxsize=8)
def small_primes(limit: int) -> tuple[int, ...]:
    """All primes <= limit, by a byte sieve."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    """Primality of n >= 2; deterministic below 2**64, Baillie-PSW above."""
    if n < 2:
        raise ValueError(f"is_prime requires n >= 2, got {n}")
    return _is_prime(n)


@lru_cache(maxsize=None)
def _is_prime(n: int) -> bool:
    for p in _TINY_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return all(_mr_witness(n, a, d, s) for a in _MR_WITNESSES)
    if not _mr_witness(n, 2, d, s):
        return False
    return _strong_lucas_prp(n)


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi symbol needs an odd positive lower argument")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _strong_lucas_prp(n: int) -> bool:
    # Strong Lucas probable-prime test with Selfridge's parameter choice.
    if _is_square(n):
        return False
    D = 5
    while True:
        j = jacobi(D % n, n)
        if j == 0:
            return False
        if j == -1:
            break
        D = -D - 2 if D > 0 else -D + 2
    Q = (1 - D) // 4
    d = n + 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # Binary ladder for U_d, V_d mod n, tracking Q**k alongside.
    U, V, qk = 1, 1, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            U, V = (U + V) * inv2 % n, (D * U + V) * inv2 % n
            qk = qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(1, s):
        V = (V * V - 2 * qk) % n
        if V == 0:
            return True
        qk = qk * qk % n
    return False


def valuation_int(n: int, p: int) -> int:
    """Largest k with p**k dividing n (n nonzero, p prime)."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    if p < 2 or not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def integer_kth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if k < 1:
        raise ValueError("root index must be positive")
    if n in (0, 1) or k == 1:
        return n
    x = 1 << ((n.bit_length() - 1) // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def is_perfect_power(n: int, k: int) -> bool:
    """True iff n == w**k for some integer w (k >= 2)."""
    if k < 2:
        raise ValueError("power index must be at least 2")
    if n < 0:
        if k % 2 == 0:
            return False
        return is_perfect_power(-n, k)
    r = integer_kth_root(n, k)
    return r**k == n


def _brent_cycle(n: int, x0: int, c: int, max_steps: int) -> int:
    # Brent's variant of Pollard rho; returns a divisor of n (possibly n
    # itself on a failed run) or 1 if the step budget ran out.
    y, r, q = x0, 1, 1
    g = 1
    steps = 0
    x = y
    ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(128, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += 128
        r *= 2
        steps += r
        if steps > max_steps:
            return 1
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g


def _pollard_rho(n: int, attempts: int = 8, max_steps: int = 1 << 20) -> int | None:
    """Deterministic Pollard rho with Brent cycle detection.

    Parameters for each attempt are derived by hashing (n, attempt), so the
    whole factorization replays exactly.  Returns a nontrivial divisor or
    None when every attempt failed within its step budget.
    """
    if n % 2 == 0:
        return 2
    for attempt in range(attempts):
        h = hashlib.blake2b(f"rho:{n}:{attempt}".encode(), digest_size=16).digest()
        x0 = 2 + int.from_bytes(h[:8], "big") % (n - 3)
        c = 1 + int.from_bytes(h[8:], "big") % (n - 2)
        g = _brent_cycle(n, x0, c, max_steps)
        if 1 < g < n:
            return g
    return None


def factor(n: int, trial_bound: int = TRIAL_DIVISION_BOUND) -> PrimeFactorization:
    """Factor a nonzero integer by trial division then Pollard rho.

    Trial division runs over sieved primes up to ``trial_bound`` with early
    exits once the remaining cofactor is 1 or prime; whatever survives goes
    to Pollard rho.  A composite that rho cannot split within its budget is
    reported honestly via complete=False and the cofactor field.
    """
    if n == 0:
        raise ValueError("cannot factor zero")
    sign = -1 if n < 0 else 1
    m = abs(n)
    found: dict[int, int] = {}
    if m > 1 and _is_prime(m):
        return PrimeFactorization(sign, ((m, 1),))
    for p in small_primes(TRIAL_DIVISION_BOUND):
        if p > trial_bound or p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
            if m == 1:
                break
            if _is_prime(m):
                found[m] = found.get(m, 0) + 1
                m = 1
                break
    cofactor = 1
    complete = True
    if m > 1:
        stack = [m]
        while stack:
            c = stack.pop()
            if _is_prime(c):
                found[c] = found.get(c, 0) + 1
                continue
            divisor = _pollard_rho(c)
            if divisor is None:
                cofactor *= c
                complete = False
            else:
                stack.append(divisor)
                stack.append(c // divisor)
    return PrimeFactorization(sign, tuple(sorted(found.items())), cofactor, complete)


def prime_divisors(n: int) -> list[int]:
    """Sorted prime divisors of a nonzero integer."""
    return factor(n).prime_list()
