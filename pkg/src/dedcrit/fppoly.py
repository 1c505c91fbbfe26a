"""Arithmetic and complete monic irreducible factorization in F_p[x].

Factorization runs squarefree split -> distinct degree -> equal degree.
Equal-degree splitting is Cantor-Zassenhaus for odd p and the trace-map
variant for p = 2; all of its randomness comes from a caller-seeded PRNG,
so results are reproducible and factors are returned in a canonical order
(degree, then lexicographic coefficient tuple).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime, prime_divisors
from .intpoly import IntPoly
from .seeding import seeded_rng


class FpPoly:
    """Polynomial over F_p, residues in [0, p) stored constant term first."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        if p < 2:
            raise ValueError(f"modulus must be at least 2, got {p}")
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: "FpPoly") -> None:
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __eq__(self, other) -> bool:
        return isinstance(other, FpPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("FpPoly", self.p, self.coeffs))

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FpPoly(self.p, out)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, [c * other for c in self.coeffs])
        if not isinstance(other, FpPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FpPoly":
        if e < 0:
            raise ValueError("negative power")
        result = FpPoly(self.p, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        p = self.p
        inv_lc = pow(other.lc, p - 2, p)
        r = list(self.coeffs)
        db = other.degree
        if len(r) <= db:
            return FpPoly(p), self
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] % p
            if c:
                factor = c * inv_lc % p
                q[i - db] = factor
                for j, bc in enumerate(other.coeffs):
                    r[i - db + j] -= factor * bc
        return FpPoly(p, q), FpPoly(p, r[:db])

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def monic(self) -> "FpPoly":
        if self.is_zero() or self.lc == 1:
            return self
        inv = pow(self.lc, self.p - 2, self.p)
        return self * inv

    def derivative(self) -> "FpPoly":
        return FpPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def pow_mod(self, e: int, modulus: "FpPoly") -> "FpPoly":
        if e < 0:
            raise ValueError("negative power")
        result = FpPoly(self.p, (1,)) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def __repr__(self) -> str:
        return f"FpPoly({self.p}, {list(self.coeffs)!r})"

    def __str__(self) -> str:
        return f"{IntPoly(self.coeffs)} (mod {self.p})"


def fp_x(p: int) -> FpPoly:
    return FpPoly(p, (0, 1))


def fp_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd in F_p[x]."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def reduce_mod_p(f: IntPoly, p: int) -> FpPoly:
    """Coefficientwise reduction of an integer polynomial into F_p[x]."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return FpPoly(p, f.coeffs)


def lift_centered(fbar: FpPoly) -> IntPoly:
    """The canonical monic lift: residues mapped into (-p/2, p/2].

    For odd p a residue c > (p-1)/2 lifts to c - p, so x - 1 (mod p) lifts
    to x - 1; for p = 2 residues stay in {0, 1}.
    """
    p = fbar.p
    half = p // 2
    return IntPoly([c - p if c > half else c for c in fbar.coeffs])


@dataclass(frozen=True)
class FactorizationModP:
    """unit * prod(fbar_i ** l_i) over F_p, factors monic irreducible, sorted."""

    p: int
    unit: int
    factors: tuple[tuple[FpPoly, int], ...]

    def product(self) -> FpPoly:
        acc = FpPoly(self.p, (self.unit,))
        for fbar, mult in self.factors:
            acc = acc * fbar**mult
        return acc


def _pth_root(f: FpPoly) -> FpPoly:
    # f has zero derivative, so it is g(x**p) = g(x)**p; in F_p the p-th
    # root of each coefficient is the coefficient itself.
    p = f.p
    cs = f.coeffs
    if any(c for i, c in enumerate(cs) if i % p):
        raise ValueError("polynomial is not a p-th power")
    return FpPoly(p, [cs[i] for i in range(0, len(cs), p)])


def _equal_degree_split(g: FpPoly, d: int, rng) -> list[FpPoly]:
    # All irreducible factors of g have degree d; split them apart.
    p = g.p
    out: list[FpPoly] = []
    stack = [g]
    exponent = (p**d - 1) // 2 if p != 2 else 0
    one = FpPoly(p, (1,))
    while stack:
        h = stack.pop()
        if h.degree == d:
            out.append(h.monic())
            continue
        split = None
        while split is None:
            a = FpPoly(p, [rng.randrange(p) for _ in range(h.degree)])
            if a.degree < 1:
                continue
            cand = fp_gcd(a, h)
            if 0 < cand.degree < h.degree:
                split = cand
                continue
            if p == 2:
                trace = FpPoly(p)
                b = a % h
                for _ in range(d):
                    trace = trace + b
                    b = b * b % h
                cand = fp_gcd(trace, h)
            else:
                b = a.pow_mod(exponent, h)
                cand = fp_gcd(b - one, h)
            if 0 < cand.degree < h.degree:
                split = cand
        stack.append(split)
        stack.append(h // split)
    return out


def _factor_squarefree(w: FpPoly, rng) -> list[FpPoly]:
    # Distinct-degree stage on a squarefree monic w, then equal-degree splits.
    p = w.p
    out: list[FpPoly] = []
    v = w
    x = fp_x(p)
    h = x
    d = 0
    while v.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(p, v)
        g = fp_gcd(v, h - x)
        if g.degree > 0:
            out.extend(_equal_degree_split(g, d, rng))
            v = v // g
            h = h % v
    if v.degree > 0:
        out.append(v)
    return out


def _factor_into(f: FpPoly, mult: int, counts: dict[FpPoly, int], rng) -> None:
    p = f.p
    if f.degree <= 0:
        return
    df = f.derivative()
    if df.is_zero():
        _factor_into(_pth_root(f), mult * p, counts, rng)
        return
    w = f // fp_gcd(f, df)
    for q in _factor_squarefree(w, rng):
        e = 0
        while True:
            quo, rem = divmod(f, q)
            if not rem.is_zero():
                break
            f = quo
            e += 1
        counts[q] = counts.get(q, 0) + mult * e
    if f.degree > 0:
        # Whatever survives has every multiplicity divisible by p.
        _factor_into(_pth_root(f), mult * p, counts, rng)


def factor_mod_p(fbar: FpPoly, seed: int = 0) -> FactorizationModP:
    """Complete monic irreducible factorization of a nonconstant fbar.

    Deterministic for a given (fbar, seed): the equal-degree stage draws all
    randomness from a PRNG keyed on both, and factors come back sorted.
    """
    if fbar.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if fbar.degree < 1:
        raise ValueError("cannot factor a constant")
    if not is_prime(fbar.p):
        raise ValueError(f"{fbar.p} is not prime")
    rng = seeded_rng("factor-mod-p", seed, fbar.p, fbar.coeffs)
    counts: dict[FpPoly, int] = {}
    _factor_into(fbar.monic(), 1, counts, rng)
    factors = tuple(sorted(counts.items(), key=lambda t: (t[0].degree, t[0].coeffs)))
    return FactorizationModP(fbar.p, fbar.lc, factors)


def is_irreducible_mod_p(fbar: FpPoly) -> bool:
    """Rabin's irreducibility test in F_p[x]."""
    if fbar.is_zero() or fbar.degree < 1:
        raise ValueError("irreducibility needs a nonconstant polynomial")
    if not is_prime(fbar.p):
        raise ValueError(f"{fbar.p} is not prime")
    f = fbar.monic()
    n = f.degree
    if n == 1:
        return True
    p = f.p
    x = fp_x(p)

    def frobenius_power(m: int) -> FpPoly:
        h = x
        for _ in range(m):
            h = h.pow_mod(p, f)
        return h

    if frobenius_power(n) != x % f:
        return False
    for q in prime_divisors(n):
        g = fp_gcd(frobenius_power(n // q) - x, f)
        if g.degree != 0:
            return False
    return True
