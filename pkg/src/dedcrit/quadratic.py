"""Quadratic rings of integers: prime splitting, valuations, pure-power tests.

These are the smallest base rings where a prime can have residue degree 2, so
they exercise the u**(p**f) - u condition beyond the rational case.  Elements
live in the integral basis {1, w}, where w = (1 + sqrt(d))/2 when d = 1 mod 4
and w = sqrt(d) otherwise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .arith import factor, is_perfect_power, is_prime, jacobi, prime_divisors, valuation_int

KIND_SPLIT = "split"
KIND_INERT = "inert"
KIND_RAMIFIED = "ramified"

REASON_UNIT_VALUATION = "nu_u_not_one"
REASON_FROBENIUS_VALUATION = "frobenius_val_not_one"


class ReducibleOverFieldError(ValueError):
    """The irreducibility screen found an actual root witness."""


@dataclass(frozen=True)
class QuadField:
    """The ring of integers of Q(sqrt(d)) for squarefree d != 0, 1."""

    d: int

    def __post_init__(self):
        if self.d in (0, 1):
            raise ValueError("d must not be 0 or 1")
        fd = factor(self.d)
        if not fd.complete or any(e != 1 for _, e in fd.factors):
            raise ValueError(f"d = {self.d} is not squarefree")

    @property
    def half_basis(self) -> bool:
        return self.d % 4 == 1

    @property
    def discriminant(self) -> int:
        return self.d if self.half_basis else 4 * self.d

    @property
    def omega_text(self) -> str:
        return f"(1+sqrt({self.d}))/2" if self.half_basis else f"sqrt({self.d})"

    def element(self, a: int, b: int = 0) -> "QuadInt":
        return QuadInt(self, a, b)


class QuadInt:
    """a + b*w in the integral basis of a quadratic field."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadField, a: int, b: int = 0):
        self.field = field
        self.a = int(a)
        self.b = int(b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def _check(self, other: "QuadInt") -> None:
        if self.field.d != other.field.d:
            raise ValueError("mixed quadratic fields")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadInt)
            and self.field.d == other.field.d
            and (self.a, self.b) == (other.a, other.b)
        )

    def __hash__(self) -> int:
        return hash(("QuadInt", self.field.d, self.a, self.b))

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.field, -self.a, -self.b)

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.field, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.field, self.a * other, self.b * other)
        if not isinstance(other, QuadInt):
            return NotImplemented
        self._check(other)
        d = self.field.d
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if self.field.half_basis:
            # w**2 = w + (d-1)/4
            return QuadInt(
                self.field,
                a1 * a2 + b1 * b2 * ((d - 1) // 4),
                a1 * b2 + a2 * b1 + b1 * b2,
            )
        return QuadInt(self.field, a1 * a2 + d * b1 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QuadInt":
        if e < 0:
            raise ValueError("negative power")
        result = QuadInt(self.field, 1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "QuadInt":
        if self.field.half_basis:
            # conj(w) = 1 - w
            return QuadInt(self.field, self.a + self.b, -self.b)
        return QuadInt(self.field, self.a, -self.b)

    def norm(self) -> int:
        d = self.field.d
        if self.field.half_basis:
            return self.a * self.a + self.a * self.b + self.b * self.b * ((1 - d) // 4)
        return self.a * self.a - d * self.b * self.b

    def sqrt_basis_doubled(self) -> tuple[int, int, int]:
        """Integer (A, B, m) with m*self = A + B*sqrt(d); m is 1 or 2."""
        if self.field.half_basis:
            return 2 * self.a + self.b, self.b, 2
        return self.a, self.b, 1

    def __repr__(self) -> str:
        return f"QuadInt(d={self.field.d}, {self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        w = "w"
        if self.a == 0:
            return f"{self.b}*{w}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*{w}"


def quadint_from_json(text: str) -> QuadInt:
    """Parse the JSON tuple ["d", "a", "b"] into a + b*w over Q(sqrt(d))."""
    import json

    data = json.loads(text)
    if not isinstance(data, list) or len(data) != 3:
        raise ValueError('expected a JSON tuple ["d", "a", "b"]')
    d, a, b = (int(item) for item in data)
    return QuadInt(QuadField(d), a, b)


def parse_quadint(field: QuadField, text: str) -> QuadInt:
    """Parse 'a', 'a+b*w', 'a-b*w', 'b*w' (whitespace-insensitive)."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty quadratic integer")
    if "w" not in s:
        return QuadInt(field, int(s), 0)
    head, _, tail = s.partition("w")
    if head.endswith("*"):
        head = head[:-1]
    if tail:
        raise ValueError(f"unexpected trailing text {tail!r}")
    # split head into the rational part and the w coefficient
    a_text, b_text = "", head
    for i in range(len(head) - 1, 0, -1):
        if head[i] in "+-":
            a_text, b_text = head[:i], head[i:]
            break
    a = int(a_text) if a_text else 0
    if b_text in ("", "+"):
        b = 1
    elif b_text == "-":
        b = -1
    else:
        b = int(b_text)
    return QuadInt(field, a, b)


@dataclass(frozen=True)
class QuadPrime:
    """A prime of the ring of integers of Q(sqrt(d)) above a rational prime p.

    For a split prime, hensel_root is a square root of d modulo p**precision
    identifying which of the two conjugate primes this is; the root lifts to
    any needed precision during valuation computations.
    """

    field: QuadField
    p: int
    kind: str
    e: int
    f: int
    hensel_root: int | None = None
    precision: int | None = None

    def label(self) -> str:
        if self.kind == KIND_SPLIT:
            return f"({self.p}, sqrt({self.field.d})={self.hensel_root} mod {self.p}^{self.precision})"
        return f"({self.p}, {self.kind})"


def kronecker(a: int, p: int) -> int:
    """Kronecker symbol (a/p) for a prime p."""
    if p == 2:
        if a % 2 == 0:
            return 0
        return 1 if a % 8 in (1, 7) else -1
    return jacobi(a % p, p)


def _sqrt_mod_p(a: int, p: int) -> int:
    # Tonelli-Shanks with a deterministic non-residue scan; p odd prime,
    # a a nonzero quadratic residue.
    a %= p
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


def _sqrt_2adic(d: int, k: int) -> int:
    # d = 1 mod 8; returns r = 1 mod 4 with r**2 = d mod 2**k (k >= 3).
    r = 1
    for j in range(3, k):
        if ((r * r - d) >> j) & 1:
            r += 1 << (j - 1)
    return r % (1 << k)


def _sqrt_to_precision(d: int, p: int, r0: int, k: int) -> int:
    """Square root of d mod p**k in the same p-adic class as r0."""
    if p == 2:
        r = _sqrt_2adic(d, k)
        if (r - r0) % 4 != 0:
            r = (1 << k) - r
        return r
    r = r0 % p
    cur = 1
    while cur < k:
        cur = min(2 * cur, k)
        mod = p**cur
        r = (r - (r * r - d) * pow(2 * r, -1, mod)) % mod
    return r


def split_prime(field: QuadField, p: int) -> list[QuadPrime]:
    """Primes of the quadratic ring above p, classified by the Kronecker
    symbol of the field discriminant: 0 ramified, +1 split, -1 inert."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    chi = kronecker(field.discriminant, p)
    if chi == 0:
        return [QuadPrime(field, p, KIND_RAMIFIED, 2, 1)]
    if chi == -1:
        return [QuadPrime(field, p, KIND_INERT, 1, 2)]
    if p == 2:
        r = _sqrt_2adic(field.d, 3)
        return [
            QuadPrime(field, 2, KIND_SPLIT, 1, 1, r, 3),
            QuadPrime(field, 2, KIND_SPLIT, 1, 1, (8 - r) % 8, 3),
        ]
    r = _sqrt_mod_p(field.d % p, p)
    r = min(r, p - r)
    return [
        QuadPrime(field, p, KIND_SPLIT, 1, 1, r, 1),
        QuadPrime(field, p, KIND_SPLIT, 1, 1, p - r, 1),
    ]


def prime_valuation(x: QuadInt, P: QuadPrime) -> int:
    """Valuation of x at the prime P.

    Inert: half the p-valuation of the norm.  Ramified: the p-valuation of
    the norm.  Split: write (1 or 2)x = A + B*sqrt(d) with integer A, B and
    evaluate v_p(A + B*r) for the Hensel root r lifted one step past the
    valuation of the norm, correcting for the doubling at p = 2.
    """
    if x.is_zero():
        raise ValueError("valuation of zero is infinite")
    p = P.p
    if P.kind == KIND_INERT:
        v = valuation_int(x.norm(), p)
        if v % 2:
            raise AssertionError("norm valuation must be even at an inert prime")
        return v // 2
    if P.kind == KIND_RAMIFIED:
        return valuation_int(x.norm(), p)
    d = x.field.d
    A, B, mden = x.sqrt_basis_doubled()
    correction = 1 if (p == 2 and mden == 2) else 0
    norm2 = A * A - d * B * B
    k = valuation_int(norm2, p) + 1
    r = _sqrt_to_precision(d, p, P.hensel_root, k)
    t = (A + B * r) % p**k
    if t == 0:
        raise AssertionError("split valuation exceeded its precision bound")
    return valuation_int(t, p) - correction


@dataclass(frozen=True)
class QuadPrimeCheck:
    prime: QuadPrime
    v_u: int
    v_frobenius: int | None
    ok: bool


@dataclass(frozen=True)
class QuadPowerVerdict:
    """Verdict for x**n - u over a quadratic ring of integers."""

    d: int
    n: int
    u: tuple[int, int]
    verdict: str
    failing_prime: QuadPrime | None = None
    reason: str | None = None
    irreducibility_status: str = "heuristic"
    checks: tuple[QuadPrimeCheck, ...] = ()


def _round_candidates(v: float) -> list[int]:
    base = round(v)
    return [base, base - 1, base + 1]


def qth_root_in_field(u: QuadInt, q: int) -> QuadInt | None:
    """Search for w in the ring with w**q == u; every hit is verified exactly.

    Candidates are reconstructed from floating q-th roots in the real or
    complex embeddings, so a miss is possible for enormous inputs but a
    returned root is always genuine.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    fld = u.field
    if u.is_zero():
        return QuadInt(fld, 0, 0)
    d = fld.d
    if d > 0:
        sq = math.sqrt(d)
        w1, w2 = ((1 + sq) / 2, (1 - sq) / 2) if fld.half_basis else (sq, -sq)
        u1 = u.a + u.b * w1
        u2 = u.a + u.b * w2
        if q % 2 == 1:
            pairs = [
                (math.copysign(abs(u1) ** (1 / q), u1), math.copysign(abs(u2) ** (1 / q), u2))
            ]
        else:
            r1, r2 = abs(u1) ** (1 / q), abs(u2) ** (1 / q)
            pairs = [(r1, r2), (r1, -r2), (-r1, r2), (-r1, -r2)]
        for s1, s2 in pairs:
            y = (s1 - s2) / (w1 - w2)
            x = s1 - y * w1
            for yy in _round_candidates(y):
                for xx in _round_candidates(x):
                    cand = QuadInt(fld, xx, yy)
                    if cand**q == u:
                        return cand
        return None
    wc = (1 + cmath.sqrt(d)) / 2 if fld.half_basis else cmath.sqrt(d)
    z = complex(u.a) + u.b * wc
    radius = abs(z) ** (1 / q)
    base_angle = cmath.phase(z) / q
    for k in range(q):
        w = cmath.rect(radius, base_angle + 2 * math.pi * k / q)
        y = w.imag / wc.imag
        x = w.real - y * wc.real
        for yy in _round_candidates(y):
            for xx in _round_candidates(x):
                cand = QuadInt(fld, xx, yy)
                if cand**q == u:
                    return cand
    return None


def screen_pure_power_irreducible(field: QuadField, n: int, u: QuadInt) -> str:
    """Screen x**n - u for irreducibility over Q(sqrt(d)).

    Raises ReducibleOverFieldError with a witness when a q-th root (or the
    -4*w**4 shape for 4 | n) is found.  Returns "certified" when the screen
    is conclusive (rational u, n odd, exact integer root checks) and
    "heuristic" otherwise.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if u.is_zero():
        raise ValueError("u must be nonzero")
    if u.b == 0 and n % 2 == 1:
        # Degree argument: [Q(sqrt(d)):Q] = 2 is coprime to n, so rational
        # irreducibility transfers; over Z the q-th power checks are exact.
        m = u.a
        for q in prime_divisors(n):
            has_root = is_perfect_power(m, q) if m > 0 else (q % 2 == 1 and is_perfect_power(-m, q))
            if has_root:
                raise ReducibleOverFieldError(
                    f"x^{n} - ({m}) is reducible: {m} is a perfect {q}th power"
                )
        return "certified"
    for q in prime_divisors(n):
        w = qth_root_in_field(u, q)
        if w is not None:
            raise ReducibleOverFieldError(
                f"x^{n} - ({u}) is reducible over Q(sqrt({field.d})): ({w})^{q} = {u}"
            )
    if n % 4 == 0:
        neg = -u
        if neg.a % 4 == 0 and neg.b % 4 == 0:
            v = QuadInt(field, neg.a // 4, neg.b // 4)
            y = qth_root_in_field(v, 2)
            if y is not None:
                if qth_root_in_field(y, 2) is not None or qth_root_in_field(-y, 2) is not None:
                    raise ReducibleOverFieldError(
                        f"x^{n} - ({u}) is reducible over Q(sqrt({field.d})): u = -4*w^4"
                    )
    return "heuristic"


def pure_power_check(field: QuadField, n: int, u: QuadInt) -> QuadPowerVerdict:
    """Exact maximality test for R[u**(1/n)] over a quadratic ring R.

    For every prime P of R dividing n*u: pass iff v_P(u) = 1, or v_P(u) = 0
    and v_P(u**(p**f) - u) = 1, where p lies under P and f is its residue
    degree.  Maximal iff every such prime passes.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if u.is_zero():
        raise ValueError("u must be nonzero")
    if u.field.d != field.d:
        raise ValueError("u does not belong to the given field")
    status = screen_pure_power_irreducible(field, n, u)
    nu = u * n
    fac = factor(nu.norm())
    checks: list[QuadPrimeCheck] = []
    failing: QuadPrime | None = None
    reason: str | None = None
    for p, _ in fac.factors:
        for P in split_prime(field, p):
            if prime_valuation(nu, P) < 1:
                continue
            v_u = prime_valuation(u, P)
            v_frob: int | None = None
            if v_u == 1:
                ok = True
            elif v_u == 0:
                # P divides n*u but not u, so p | n and p stays small.
                w = u ** (p**P.f) - u
                if w.is_zero():
                    ok = False
                else:
                    v_frob = prime_valuation(w, P)
                    ok = v_frob == 1
                if not ok and failing is None:
                    failing, reason = P, REASON_FROBENIUS_VALUATION
            else:
                ok = False
                if failing is None:
                    failing, reason = P, REASON_UNIT_VALUATION
            checks.append(QuadPrimeCheck(P, v_u, v_frob, ok))
    if failing is not None:
        verdict = "not-maximal"
    elif fac.complete:
        verdict = "maximal"
    else:
        verdict = "unknown"
    return QuadPowerVerdict(
        field.d, n, (u.a, u.b), verdict, failing, reason, status, tuple(checks)
    )


def sweep_pure_powers(
    field: QuadField, n_values, m_values
) -> list[tuple[int, int, QuadPowerVerdict]]:
    """Run pure_power_check over a grid of rational u = m, skipping the
    combinations the irreducibility screen rejects."""
    out = []
    for n in n_values:
        for m in m_values:
            try:
                verdict = pure_power_check(field, n, field.element(m))
            except ReducibleOverFieldError:
                continue
            out.append((n, m, verdict))
    return out
