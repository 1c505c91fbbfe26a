"""Dense univariate polynomials with exact arbitrary-precision integer coefficients.

The coefficient list is stored constant term first; the zero polynomial is
the empty tuple, and nothing else ever carries a zero leading coefficient.
"""

from __future__ import annotations

import json

from .arith import is_prime, valuation_int


class PolyParseError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class IntPoly:
    """Polynomial sum(coeffs[i] * x**i) with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

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

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shifted(self, c: int) -> "IntPoly":
        """Return f(x + c)."""
        acc = IntPoly()
        xc = IntPoly((c, 1))
        for coeff in reversed(self.coeffs):
            acc = acc * xc + IntPoly((coeff,))
        return acc

    def coeff_strings(self) -> list[str]:
        """Decimal-string coefficient array, constant term first; zero is ["0"]."""
        return [str(c) for c in self.coeffs] if self.coeffs else ["0"]

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def monic_divmod(f: IntPoly, phi: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Exact Euclidean division of f by a monic, nonconstant phi over Z.

    Returns (Q, R) with f == Q*phi + R and R == 0 or deg(R) < deg(phi).
    The quotient is monic whenever f is monic of degree >= deg(phi).
    """
    if phi.is_zero() or not phi.is_monic():
        raise ValueError("divisor must be monic")
    if phi.degree < 1:
        raise ValueError("divisor must be nonconstant")
    r = list(f.coeffs)
    dphi = phi.degree
    if len(r) <= dphi:
        return IntPoly(), f
    q = [0] * (len(r) - dphi)
    for i in range(len(r) - 1, dphi - 1, -1):
        c = r[i]
        if c:
            q[i - dphi] = c
            for j, pc in enumerate(phi.coeffs):
                r[i - dphi + j] -= c * pc
    return IntPoly(q), IntPoly(r[:dphi])


def gauss_valuation(f: IntPoly, p: int) -> int:
    """Minimum p-adic valuation over the nonzero coefficients of f != 0."""
    if f.is_zero():
        raise ValueError("valuation of the zero polynomial is infinite")
    return min(valuation_int(c, p) for c in f.coeffs if c != 0)


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _prem(a: list[int], b: list[int]) -> list[int]:
    # Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a reduced modulo b.
    db = len(b) - 1
    lb = b[-1]
    r = _trim(list(a))
    e = (len(a) - 1) - db + 1
    while r and len(r) - 1 >= db:
        lead = r[-1]
        shift = (len(r) - 1) - db
        r = [lb * c for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lead * bc
        r = _trim(r)
        e -= 1
    if e > 0:
        scale = lb**e
        r = [scale * c for c in r]
    return r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant of f and g over Z via the subresultant remainder sequence."""
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree == 0:
        return f.lc**g.degree
    if g.degree == 0:
        return g.lc**f.degree
    a, b = list(f.coeffs), list(g.coeffs)
    s = 1
    if len(a) < len(b):
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            s = -s
        a, b = b, a
    gg = 1
    h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _prem(a, b)
        a = b
        denom = gg * h**delta
        b = [c // denom for c in r]
        if not b:
            return 0
        gg = a[-1]
        if delta == 1:
            h = gg
        elif delta > 1:
            h = gg**delta // h ** (delta - 1)
        if len(b) - 1 == 0:
            break
    da = len(a) - 1
    res = b[-1] ** da // h ** (da - 1)
    return s * res


def discriminant(f: IntPoly) -> int:
    """Discriminant of a monic f of degree >= 2.

    Computed as (-1)**(n*(n-1)/2) * Res(f, f'); the sign convention is fixed
    here because only the valuations of the result matter downstream.
    """
    if f.is_zero() or not f.is_monic():
        raise ValueError("discriminant requires a monic polynomial")
    n = f.degree
    if n < 2:
        raise ValueError("discriminant requires degree >= 2")
    res = resultant(f, f.derivative())
    return -res if (n * (n - 1) // 2) % 2 else res


def cyclotomic_prime_power(p: int, r: int) -> IntPoly:
    """The cyclotomic polynomial of prime-power index p**r.

    This is (x**(p**r) - 1) / (x**(p**(r-1)) - 1), i.e. the sum of x**(j*p**(r-1))
    for j = 0..p-1, of degree p**r - p**(r-1).
    """
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError("exponent must be positive")
    step = p ** (r - 1)
    coeffs = [0] * ((p - 1) * step + 1)
    for j in range(p):
        coeffs[j * step] = 1
    return IntPoly(coeffs)


def phi_adic_expansion(f: IntPoly, phi: IntPoly) -> list[IntPoly]:
    """Digits (a_0, ..., a_l) with f = sum(a_i * phi**(l-i)) and deg(a_i) < deg(phi).

    a_0 is the leading digit and is monic whenever f is monic.
    """
    if phi.is_zero() or not phi.is_monic():
        raise ValueError("phi must be monic")
    if phi.degree < 1:
        raise ValueError("phi must be nonconstant")
    if f.degree < phi.degree:
        raise ValueError("phi-adic expansion needs deg(phi) <= deg(f)")
    digits: list[IntPoly] = []
    g = f
    while not g.is_zero():
        g, rem = monic_divmod(g, phi)
        digits.append(rem)
    digits.reverse()
    return digits


def _parse_coeff_array(text: str) -> IntPoly:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolyParseError(f"invalid coefficient array: {exc.msg}", exc.pos) from exc
    if not isinstance(data, list):
        raise PolyParseError("coefficient array must be a JSON list", 0)
    coeffs = []
    for idx, item in enumerate(data):
        if isinstance(item, bool) or not isinstance(item, (int, str)):
            raise PolyParseError(f"coefficient {idx} must be an integer or string", 0)
        try:
            coeffs.append(int(item))
        except ValueError as exc:
            raise PolyParseError(f"coefficient {idx} is not an integer: {item!r}", 0) from exc
    return IntPoly(coeffs)


def parse_poly(text: str) -> IntPoly:
    """Parse either a JSON coefficient array (constant term first) or term text.

    Term text is whitespace-insensitive sums of `c`, `c*x^k`, `c x^k`, `x^k`,
    `x` joined by '+'/'-', e.g. "x^2 - 5" or "3*x^4+2x-7".
    """
    stripped = text.lstrip()
    if stripped.startswith("["):
        return _parse_coeff_array(text)
    return _parse_terms(text)


def _parse_terms(s: str) -> IntPoly:
    n = len(s)
    coeffs: dict[int, int] = {}

    def skip(i: int) -> int:
        while i < n and s[i].isspace():
            i += 1
        return i

    def read_int(i: int) -> tuple[int, int]:
        j = i
        while j < n and s[j].isdigit():
            j += 1
        return int(s[i:j]), j

    i = skip(0)
    if i >= n:
        raise PolyParseError("empty polynomial", i)
    first = True
    while i < n:
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i = skip(i + 1)
        elif not first:
            raise PolyParseError("expected '+' or '-' between terms", i)
        if i >= n:
            raise PolyParseError("dangling sign", i)
        coeff = None
        if s[i].isdigit():
            coeff, i = read_int(i)
            i = skip(i)
            if i < n and s[i] == "*":
                i = skip(i + 1)
                if i >= n or s[i] not in "xX":
                    raise PolyParseError("expected 'x' after '*'", i)
        if i < n and s[i] in "xX":
            i = skip(i + 1)
            k = 1
            if i < n and s[i] == "^":
                i = skip(i + 1)
                if i >= n or not s[i].isdigit():
                    raise PolyParseError("expected exponent digits after '^'", i)
                k, i = read_int(i)
            coeffs[k] = coeffs.get(k, 0) + sign * (1 if coeff is None else coeff)
        else:
            if coeff is None:
                raise PolyParseError("expected a coefficient or 'x'", i)
            coeffs[0] = coeffs.get(0, 0) + sign * coeff
        first = False
        i = skip(i)
        if i < n and s[i] not in "+-":
            raise PolyParseError(f"unexpected character {s[i]!r}", i)
    out = [0] * (max(coeffs) + 1 if coeffs else 0)
    for k, c in coeffs.items():
        out[k] = c
    return IntPoly(out)
