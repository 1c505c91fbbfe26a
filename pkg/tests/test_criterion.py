import json

import pytest

from dedcrit.criterion import (
    VERDICT_MAXIMAL,
    VERDICT_NOT_MAXIMAL,
    certificate_to_dict,
    certificate_to_json,
    classical_dedekind_oracle,
    is_maximal_global,
    lift_stability_check,
    local_maximality,
)
from dedcrit.arith import valuation_int
from dedcrit.eisenstein import is_eisenstein_at
from dedcrit.fppoly import FpPoly, is_irreducible_mod_p, reduce_mod_p
from dedcrit.intpoly import IntPoly, cyclotomic_prime_power, discriminant, parse_poly
from dedcrit.seeding import seeded_rng


def _random_irreducible_polys(count, rng, degrees=(2, 7), bound=50):
    out = []
    while len(out) < count:
        deg = rng.randrange(*degrees)
        f = IntPoly([rng.randrange(-bound, bound + 1) for _ in range(deg)] + [1])
        if f.degree < 2:
            continue
        for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29):
            if is_irreducible_mod_p(reduce_mod_p(f, q)):
                out.append(f)
                break
    return out


def test_local_maximality_examples():
    rep = local_maximality(parse_poly("x^2-5"), 2)
    assert not rep.locally_maximal
    (ev,) = rep.factors
    assert ev.fbar == FpPoly(2, [1, 1]) and ev.multiplicity == 2
    assert ev.remainder == IntPoly([-4]) and ev.remainder_valuation == 2
    assert not ev.satisfied

    rep = local_maximality(parse_poly("x^2-7"), 2)
    (ev,) = rep.factors
    assert ev.remainder == IntPoly([-6]) and ev.remainder_valuation == 1
    assert rep.locally_maximal

    rep = local_maximality(parse_poly("x^3-2"), 2)
    (ev,) = rep.factors
    assert ev.lift == IntPoly([0, 1]) and ev.multiplicity == 3
    assert ev.remainder == IntPoly([-2]) and ev.remainder_valuation == 1
    assert rep.locally_maximal


def test_local_maximality_skips_valuation_for_simple_factors():
    rep = local_maximality(parse_poly("x^2+1"), 5)
    assert rep.locally_maximal
    assert all(ev.multiplicity == 1 and ev.remainder_valuation is None for ev in rep.factors)


def test_local_maximality_errors():
    with pytest.raises(ValueError):
        local_maximality(parse_poly("2x^2-1"), 2)
    with pytest.raises(ValueError):
        local_maximality(parse_poly("x-1"), 2)
    with pytest.raises(ValueError):
        local_maximality(parse_poly("x^2-1"), 4)


def test_classical_oracle_examples():
    assert classical_dedekind_oracle(parse_poly("x^2-5"), 2) is False
    assert classical_dedekind_oracle(parse_poly("x^2-7"), 2) is True
    assert classical_dedekind_oracle(parse_poly("x^2+1"), 3) is True


def test_global_examples():
    cert = is_maximal_global(cyclotomic_prime_power(3, 2))
    assert cert.verdict == VERDICT_MAXIMAL
    assert [r.p for r in cert.checked_primes] == [3]
    (ev,) = cert.checked_primes[0].factors
    assert ev.lift == parse_poly("x-1")
    assert ev.remainder == IntPoly([3])

    assert is_maximal_global(parse_poly("x^2-5")).verdict == VERDICT_NOT_MAXIMAL
    cert = is_maximal_global(parse_poly("x^3-2"))
    assert cert.verdict == VERDICT_MAXIMAL
    assert [r.p for r in cert.checked_primes] == [2, 3]
    assert cert.disc == -108


def test_global_rejects_zero_discriminant():
    with pytest.raises(ValueError):
        is_maximal_global(parse_poly("x^2-2x+1"))


def test_checked_primes_are_exactly_square_divisors():
    rng = seeded_rng(0, "checked-primes")
    for f in _random_irreducible_polys(40, rng):
        cert = is_maximal_global(f)
        assert cert.disc_factorization.complete
        expected = [
            p for p, _ in cert.disc_factorization.factors if valuation_int(cert.disc, p) >= 2
        ]
        assert [r.p for r in cert.checked_primes] == expected


def test_oracle_equivalence_random_sample():
    rng = seeded_rng(0, "oracle-equivalence-unit")
    from dedcrit.arith import small_primes

    checked = 0
    for f in _random_irreducible_polys(60, rng):
        d = discriminant(f)
        for p in small_primes(100):
            if valuation_int(d, p) >= 2:
                assert (
                    local_maximality(f, p).locally_maximal
                    == classical_dedekind_oracle(f, p)
                ), (f, p)
                checked += 1
    assert checked > 20


def test_verdict_against_round_two_maximal_order():
    # end-to-end oracle from a different algorithm family: Z[alpha] is the
    # maximal order iff the Round-2 field discriminant equals disc(f)
    sympy = pytest.importorskip("sympy")
    from sympy.polys.numberfields.basis import round_two

    x = sympy.Symbol("x")
    rng = seeded_rng(0, "round-two-oracle")
    for f in _random_irreducible_polys(40, rng, degrees=(2, 5), bound=20):
        cert = is_maximal_global(f)
        poly = sympy.Poly([int(c) for c in reversed(f.coeffs)], x, domain=sympy.ZZ)
        _, field_disc = round_two(poly)
        assert cert.verdict in ("maximal", "not-maximal")
        assert (cert.verdict == "maximal") == (field_disc == cert.disc), f
    for text, expect in [("x^2-5", False), ("x^3-2", True), ("x^2-7", True)]:
        f = parse_poly(text)
        cert = is_maximal_global(f)
        poly = sympy.Poly([int(c) for c in reversed(f.coeffs)], x, domain=sympy.ZZ)
        assert (round_two(poly)[1] == cert.disc) == (cert.verdict == "maximal") == expect


def test_forced_check_at_tame_prime_is_maximal():
    # where p**2 does not divide disc, the local engine must say yes
    rng = seeded_rng(0, "tame-primes")
    from dedcrit.arith import small_primes

    for f in _random_irreducible_polys(25, rng):
        d = discriminant(f)
        for p in small_primes(30):
            if valuation_int(d, p) <= 1:
                assert local_maximality(f, p).locally_maximal, (f, p)


def test_eisenstein_implies_locally_maximal_sample():
    rng = seeded_rng(0, "eisenstein-local-unit")
    for _ in range(40):
        p = rng.choice([2, 3, 5, 7, 11])
        deg = rng.randrange(2, 7)
        c0 = p * rng.choice([c for c in range(-9, 10) if c % p != 0])
        mid = [p * rng.randrange(-9, 10) for _ in range(deg - 1)]
        f = IntPoly([c0] + mid + [1])
        assert is_eisenstein_at(f, p)
        assert local_maximality(f, p).locally_maximal


def test_lift_stability_examples():
    assert lift_stability_check(parse_poly("x^2-5"), 2, 0, 10) is True
    assert lift_stability_check(parse_poly("x^2-7"), 2, 0, 10) is True
    assert lift_stability_check(cyclotomic_prime_power(3, 2), 3, 0, 10) is True


def test_lift_stability_requires_repeated_factor():
    # x^2+1 mod 5 = (x+2)(x+3), both simple
    with pytest.raises(ValueError):
        lift_stability_check(parse_poly("x^2+1"), 5, 0, 5)
    with pytest.raises(ValueError):
        lift_stability_check(parse_poly("x^2-5"), 2, 3, 5)


def test_certificate_serialization_schema():
    cert = is_maximal_global(parse_poly("x^2-5"))
    doc = certificate_to_dict(cert)
    assert doc["f"] == ["-5", "0", "1"]
    assert doc["disc"] == "20"
    assert doc["disc_factors"]["factors"] == [["2", "2"], ["5", "1"]]
    assert doc["disc_factors"]["complete"] is True
    assert doc["verdict"] == "not-maximal"
    assert doc["irreducibility_status"] in (
        "certified-eisenstein",
        "certified-modp",
        "assumed",
    )
    (prime,) = doc["primes"]
    assert prime["p"] == "2" and prime["locally_maximal"] is False
    (fev,) = prime["factors"]
    assert fev["phi_bar"] == ["1", "1"]
    assert fev["l"] == "2"
    assert fev["lift"] == ["1", "1"]
    assert fev["remainder"] == ["-4"]
    assert fev["remainder_val"] == "2"
    assert fev["ok"] is False
    # remainder_val is null for simple factors
    cert2 = is_maximal_global(parse_poly("x^3 - x - 1"))
    for prime in certificate_to_dict(cert2)["primes"]:
        for fev in prime["factors"]:
            if fev["l"] == "1":
                assert fev["remainder_val"] is None
    # the JSON text is valid and round-trips
    assert json.loads(certificate_to_json(cert)) == doc


def test_certificates_byte_identical_across_runs():
    for text in ("x^2-5", "x^3-2", "x^5 - 30x^3 + 12x - 12"):
        f = parse_poly(text)
        a = certificate_to_json(is_maximal_global(f, seed=7))
        b = certificate_to_json(is_maximal_global(f, seed=7))
        assert a.encode() == b.encode()


def test_unknown_verdict_on_incomplete_factorization(monkeypatch):
    # an incomplete discriminant factorization must never yield "maximal"
    import dedcrit.criterion as criterion
    from dedcrit.arith import PrimeFactorization, factor

    def incomplete_factor(n):
        real = factor(n)
        if not real.factors:
            return real
        (p, e), *rest = real.factors
        cof = real.cofactor
        for q, k in rest:
            cof *= q**k
        return PrimeFactorization(real.sign, ((p, e),), cof, False)

    monkeypatch.setattr(criterion, "factor", incomplete_factor)
    # disc(x^2-7) = 28 = 2^2 * 7: the check at 2 passes, 7 is hidden
    assert is_maximal_global(parse_poly("x^2-7")).verdict == "unknown"
    # a failing prime still forces not-maximal
    assert is_maximal_global(parse_poly("x^2-5")).verdict == VERDICT_NOT_MAXIMAL


def test_irreducibility_status_values():
    assert is_maximal_global(parse_poly("x^3-2")).irreducibility_status == "certified-eisenstein"
    # x^2+1 is not Eisenstein under any small shift at a useful prime, but is
    # irreducible mod 3
    status = is_maximal_global(parse_poly("x^2+1")).irreducibility_status
    assert status in ("certified-eisenstein", "certified-modp")
    # shifted Eisenstein: cyclotomic of index 9 at the shift x -> x+1
    assert (
        is_maximal_global(cyclotomic_prime_power(3, 2)).irreducibility_status
        == "certified-eisenstein"
    )
