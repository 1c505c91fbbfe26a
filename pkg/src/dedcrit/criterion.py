"""Maximality of Z[alpha] by remainder valuations, with a classical oracle.

The per-prime engine factors f mod p and, for each repeated irreducible
factor, divides f by a canonical monic lift and checks that the remainder has
Gaussian valuation exactly 1; factors of multiplicity 1 need no remainder
check at all.  The global test aggregates over exactly the primes whose
square divides disc(f).  ``classical_dedekind_oracle`` is the textbook
gcd formulation of Dedekind's criterion, kept as an independent cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .arith import PrimeFactorization, factor, is_prime, small_primes
from .eisenstein import is_eisenstein_at
from .fppoly import (
    FpPoly,
    factor_mod_p,
    fp_gcd,
    is_irreducible_mod_p,
    lift_centered,
    reduce_mod_p,
)
from .intpoly import IntPoly, discriminant, gauss_valuation, monic_divmod
from .seeding import seeded_rng

VERDICT_MAXIMAL = "maximal"
VERDICT_NOT_MAXIMAL = "not-maximal"
VERDICT_UNKNOWN = "unknown"


@dataclass(frozen=True)
class FactorEvidence:
    """Evidence for one irreducible factor of f mod p.

    remainder_valuation is None when multiplicity == 1: the criterion never
    inspects the remainder in that case.
    """

    fbar: FpPoly
    multiplicity: int
    lift: IntPoly
    remainder: IntPoly
    remainder_valuation: int | None
    satisfied: bool


@dataclass(frozen=True)
class LocalReport:
    p: int
    factors: tuple[FactorEvidence, ...]
    locally_maximal: bool


@dataclass(frozen=True)
class Certificate:
    f: IntPoly
    disc: int
    disc_factorization: PrimeFactorization
    checked_primes: tuple[LocalReport, ...]
    verdict: str
    irreducibility_status: str

    def to_dict(self) -> dict:
        return certificate_to_dict(self)

    def to_json(self) -> str:
        return certificate_to_json(self)


def _require_engine_input(f: IntPoly, p: int) -> None:
    if f.is_zero() or not f.is_monic():
        raise ValueError("f must be monic")
    if f.degree < 2:
        raise ValueError("f must have degree at least 2")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")


def local_maximality(f: IntPoly, p: int, seed: int = 0) -> LocalReport:
    """Is Z[alpha] maximal at p?  f must be monic, degree >= 2, irreducible
    over the rationals (irreducibility is a documented precondition, not
    rechecked here).

    Factors f mod p; a factor of multiplicity 1 passes outright, and a
    repeated factor passes iff the remainder of f upon division by the
    canonical lift has p-valuation exactly 1.
    """
    _require_engine_input(f, p)
    fac = factor_mod_p(reduce_mod_p(f, p), seed)
    evidence = []
    for fbar_i, mult in fac.factors:
        lift = lift_centered(fbar_i)
        _, rem = monic_divmod(f, lift)
        if mult == 1:
            evidence.append(FactorEvidence(fbar_i, mult, lift, rem, None, True))
            continue
        if rem.is_zero():
            raise ValueError(
                "a lifted repeated factor divides f exactly; f is reducible over the rationals"
            )
        v = gauss_valuation(rem, p)
        evidence.append(FactorEvidence(fbar_i, mult, lift, rem, v, v == 1))
    return LocalReport(p, tuple(evidence), all(e.satisfied for e in evidence))


def classical_dedekind_oracle(f: IntPoly, p: int, seed: int = 0) -> bool:
    """Textbook Dedekind criterion at p, used as an independent oracle.

    With fbar = prod(phibar_i**l_i), let gbar = prod(phibar_i) and
    hbar = fbar/gbar; lift both monically to g, h and set T = (g*h - f)/p.
    Z[alpha] is maximal at p iff gcd(Tbar, gbar, hbar) = 1 in F_p[x].
    """
    _require_engine_input(f, p)
    fbar = reduce_mod_p(f, p)
    fac = factor_mod_p(fbar, seed)
    gbar = FpPoly(p, (1,))
    for fbar_i, _ in fac.factors:
        gbar = gbar * fbar_i
    hbar = fbar // gbar
    g = lift_centered(gbar)
    h = lift_centered(hbar)
    t_num = g * h - f
    t_coeffs = []
    for c in t_num.coeffs:
        if c % p:
            raise AssertionError("g*h - f is not divisible by p")
        t_coeffs.append(c // p)
    tbar = FpPoly(p, t_coeffs)
    common = fp_gcd(fp_gcd(tbar, gbar), hbar)
    return common.degree == 0


def _irreducibility_status(f: IntPoly, disc: int) -> str:
    # Cheap certificates only: Eisenstein after small shifts, else
    # irreducibility mod a small prime not dividing the discriminant.
    for shift in (0, 1, -1):
        g = f if shift == 0 else f.shifted(shift)
        const = g.coeffs[0] if g.coeffs else 0
        for p in small_primes(1000):
            if const % p == 0 and is_eisenstein_at(g, p):
                return "certified-eisenstein"
    for p in small_primes(100):
        if disc % p != 0 and is_irreducible_mod_p(reduce_mod_p(f, p)):
            return "certified-modp"
    return "assumed"


def is_maximal_global(f: IntPoly, seed: int = 0) -> Certificate:
    """Decide whether Z[alpha] is the full ring of integers of Q(alpha).

    Only primes whose square divides disc(f) can obstruct maximality, so
    exactly those are checked.  The verdict is "maximal" only when the
    discriminant factorization is complete and every checked prime passes;
    an incomplete factorization with no failures yields "unknown", never an
    unsound "maximal".
    """
    if f.is_zero() or not f.is_monic():
        raise ValueError("f must be monic")
    if f.degree < 2:
        raise ValueError("f must have degree at least 2")
    disc = discriminant(f)
    if disc == 0:
        raise ValueError("discriminant is zero: f has a repeated factor and is not irreducible")
    dfac = factor(disc)
    reports = tuple(
        local_maximality(f, p, seed) for p, e in dfac.factors if e >= 2
    )
    if any(not r.locally_maximal for r in reports):
        verdict = VERDICT_NOT_MAXIMAL
    elif dfac.complete:
        verdict = VERDICT_MAXIMAL
    else:
        verdict = VERDICT_UNKNOWN
    return Certificate(f, disc, dfac, reports, verdict, _irreducibility_status(f, disc))


def lift_stability_check(
    f: IntPoly, p: int, factor_index: int, trials: int, seed: int = 0
) -> bool:
    """Check that the remainder-valuation predicate does not depend on the lift.

    For the factor at ``factor_index`` (which must have multiplicity >= 2),
    compares the predicate [valuation(remainder) == 1] across the canonical
    lift and ``trials`` random monic lifts phi + p*H with deg(H) < deg(phi).
    """
    _require_engine_input(f, p)
    if trials < 1:
        raise ValueError("trials must be positive")
    fac = factor_mod_p(reduce_mod_p(f, p), seed)
    if not 0 <= factor_index < len(fac.factors):
        raise ValueError(f"no factor with index {factor_index}")
    fbar_i, mult = fac.factors[factor_index]
    if mult < 2:
        raise ValueError("lift independence applies only to repeated factors")
    base = lift_centered(fbar_i)

    def predicate(lift: IntPoly) -> bool:
        _, rem = monic_divmod(f, lift)
        return (not rem.is_zero()) and gauss_valuation(rem, p) == 1

    expected = predicate(base)
    rng = seeded_rng("lift-stability", seed, p, f.coeffs, factor_index)
    span = 3 * p
    for _ in range(trials):
        h = IntPoly([rng.randrange(-span, span + 1) for _ in range(fbar_i.degree)])
        if predicate(base + h * p) != expected:
            return False
    return True


def _poly_json(f: IntPoly) -> list[str]:
    return f.coeff_strings()


def _fp_json(g: FpPoly) -> list[str]:
    return [str(c) for c in g.coeffs] if g.coeffs else ["0"]


def factorization_to_dict(fac: PrimeFactorization) -> dict:
    return {
        "sign": str(fac.sign),
        "factors": [[str(p), str(e)] for p, e in fac.factors],
        "cofactor": str(fac.cofactor),
        "complete": fac.complete,
    }


def local_report_to_dict(report: LocalReport) -> dict:
    return {
        "p": str(report.p),
        "locally_maximal": report.locally_maximal,
        "factors": [
            {
                "phi_bar": _fp_json(ev.fbar),
                "l": str(ev.multiplicity),
                "lift": _poly_json(ev.lift),
                "remainder": _poly_json(ev.remainder),
                "remainder_val": None
                if ev.remainder_valuation is None
                else str(ev.remainder_valuation),
                "ok": ev.satisfied,
            }
            for ev in report.factors
        ],
    }


def certificate_to_dict(cert: Certificate) -> dict:
    """Certificate as a JSON-ready dict; every integer is a decimal string."""
    return {
        "f": _poly_json(cert.f),
        "disc": str(cert.disc),
        "disc_factors": factorization_to_dict(cert.disc_factorization),
        "primes": [local_report_to_dict(r) for r in cert.checked_primes],
        "verdict": cert.verdict,
        "irreducibility_status": cert.irreducibility_status,
    }


def certificate_to_json(cert: Certificate) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2)
