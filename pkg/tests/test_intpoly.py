import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dedcrit.intpoly import (
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
from dedcrit.seeding import seeded_rng

X = IntPoly((0, 1))


def _sylvester_resultant(f, g):
    # Independent oracle: determinant of the Sylvester matrix by the
    # fraction-free Bareiss elimination.
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    rows = [[0] * size for _ in range(size)]
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        for j, c in enumerate(fc):
            rows[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(gc):
            rows[n + i][i + j] = c
    return _bareiss_det(rows)


def _bareiss_det(rows):
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _disc_oracle(f):
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * _sylvester_resultant(f, f.derivative())


small_coeffs = st.lists(st.integers(-50, 50), min_size=0, max_size=8)


def test_normalization_and_basics():
    assert IntPoly([1, 2, 0, 0]) == IntPoly([1, 2])
    assert IntPoly([]).is_zero() and IntPoly([0, 0]).is_zero()
    assert IntPoly([]).degree == -1
    f = parse_poly("x^3 - 2")
    assert f.coeffs == (-2, 0, 0, 1)
    assert f(3) == 25
    assert f.derivative() == IntPoly([0, 0, 3])
    assert str(f) == "x^3 - 2"


def test_shifted():
    f = parse_poly("x^2 - 5")
    assert f.shifted(1) == parse_poly("x^2 + 2x - 4")
    assert f.shifted(-1) == parse_poly("x^2 - 2x - 4")


def test_parse_formats():
    assert parse_poly('["-5","0","1"]') == parse_poly("x^2-5")
    assert parse_poly("[1, 0, 1]") == parse_poly("x^2+1")
    assert parse_poly("3*x^4+2x-7") == IntPoly([-7, 2, 0, 0, 3])
    assert parse_poly("  x ^ 2  -  5 ") == IntPoly([-5, 0, 1])
    assert parse_poly("-x^2 + x^2") == IntPoly([])
    assert parse_poly("7") == IntPoly([7])
    assert parse_poly("2 x") == IntPoly([0, 2])


def test_parse_round_trip_through_str():
    rng = seeded_rng(0, "poly-str-roundtrip")
    for _ in range(200):
        f = IntPoly([rng.randrange(-99, 100) for _ in range(rng.randrange(0, 7))])
        assert parse_poly(str(f)) == f


@pytest.mark.parametrize(
    "text,pos",
    [
        ("x^2 + x^a - 1", 8),
        ("", 0),
        ("x^2 ++ 1", 5),
        ("3*y", 2),
        ("x^2 - ", 6),
        ("x^2 & 1", 4),
    ],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolyParseError) as exc:
        parse_poly(text)
    assert exc.value.position == pos


def test_monic_divmod_examples():
    q, r = monic_divmod(parse_poly("x^2+1"), parse_poly("x-1"))
    assert (q, r) == (parse_poly("x+1"), IntPoly([2]))
    q, r = monic_divmod(parse_poly("x^2-5"), parse_poly("x+1"))
    assert (q, r) == (parse_poly("x-1"), IntPoly([-4]))
    q, r = monic_divmod(parse_poly("x^3-2"), X)
    assert (q, r) == (parse_poly("x^2"), IntPoly([-2]))


def test_monic_divmod_errors():
    with pytest.raises(ValueError):
        monic_divmod(parse_poly("x^2+1"), parse_poly("2x-1"))
    with pytest.raises(ValueError):
        monic_divmod(parse_poly("x^2+1"), IntPoly([1]))


def test_monic_divmod_round_trip_random():
    rng = seeded_rng(0, "divmod-roundtrip")
    for _ in range(1000):
        f = IntPoly([rng.randrange(-100, 101) for _ in range(rng.randrange(0, 9))])
        dphi = rng.randrange(1, 5)
        phi = IntPoly([rng.randrange(-10, 11) for _ in range(dphi)] + [1])
        q, r = monic_divmod(f, phi)
        assert q * phi + r == f
        assert r.is_zero() or r.degree < phi.degree
        if f.is_monic() and f.degree >= phi.degree:
            assert q.is_monic()


def test_gauss_valuation_examples():
    assert gauss_valuation(IntPoly([-4]), 2) == 2
    assert gauss_valuation(parse_poly("2x^2+6x+4"), 2) == 1
    assert gauss_valuation(parse_poly("x+2"), 2) == 0
    with pytest.raises(ValueError):
        gauss_valuation(IntPoly([]), 2)


@settings(max_examples=150)
@given(small_coeffs, small_coeffs, st.sampled_from([2, 3, 5, 7]))
def test_gauss_valuation_multiplicative(a, b, p):
    f, g = IntPoly(a), IntPoly(b)
    if f.is_zero() or g.is_zero():
        return
    assert gauss_valuation(f * g, p) == gauss_valuation(f, p) + gauss_valuation(g, p)


def test_discriminant_examples():
    assert discriminant(parse_poly("x^2-5")) == 20
    assert discriminant(parse_poly("x^3-2")) == -108
    assert discriminant(parse_poly("x^2+x+1")) == -3


def test_discriminant_errors():
    with pytest.raises(ValueError):
        discriminant(parse_poly("x-1"))
    with pytest.raises(ValueError):
        discriminant(parse_poly("2x^2-1"))


def test_discriminant_pure_power_closed_form():
    # disc(x^n - a) has |.| = n^n * |a|^(n-1) and sign (-1)^(n(n-1)/2) * (-1)^(n^2-1)
    for n in range(2, 9):
        for a in range(-20, 21):
            f = IntPoly([-a] + [0] * (n - 1) + [1])
            expected = (
                (-1) ** (n * (n - 1) // 2) * n**n * a ** (n - 1) * (-1) ** (n * n - 1)
            )
            got = discriminant(f)
            assert got == expected, (n, a)
            assert abs(got) == n**n * abs(a) ** (n - 1)


def test_resultant_against_sylvester_oracle():
    rng = seeded_rng(0, "resultant-oracle")
    for _ in range(300):
        f = IntPoly([rng.randrange(-20, 21) for _ in range(rng.randrange(1, 7))])
        g = IntPoly([rng.randrange(-20, 21) for _ in range(rng.randrange(1, 7))])
        if f.is_zero() or g.is_zero():
            continue
        assert resultant(f, g) == _sylvester_resultant(f, g), (f, g)


def test_discriminant_against_oracle_random_monic():
    rng = seeded_rng(0, "disc-oracle")
    for _ in range(200):
        deg = rng.randrange(2, 7)
        f = IntPoly([rng.randrange(-30, 31) for _ in range(deg)] + [1])
        assert discriminant(f) == _disc_oracle(f)


def test_resultant_with_common_factor_is_zero():
    f = parse_poly("x^2-1")
    g = parse_poly("x^3-x")
    assert resultant(f, g) == 0
    assert _sylvester_resultant(f, g) == 0


def test_cyclotomic_examples():
    assert cyclotomic_prime_power(2, 2) == parse_poly("x^2+1")
    assert cyclotomic_prime_power(3, 2) == parse_poly("x^6+x^3+1")
    assert cyclotomic_prime_power(5, 1) == parse_poly("x^4+x^3+x^2+x+1")
    with pytest.raises(ValueError):
        cyclotomic_prime_power(4, 1)
    with pytest.raises(ValueError):
        cyclotomic_prime_power(3, 0)


def test_cyclotomic_divides_x_power_minus_one():
    for p, r in [(2, 3), (3, 2), (5, 1), (7, 1)]:
        f = cyclotomic_prime_power(p, r)
        assert f.degree == p**r - p ** (r - 1)
        big = IntPoly([-1] + [0] * (p**r - 1) + [1])
        small = IntPoly([-1] + [0] * (p ** (r - 1) - 1) + [1])
        assert f * small == big
        assert f(1) == p


def test_phi_adic_examples():
    digits = phi_adic_expansion(parse_poly("x^4+2x^2+3"), parse_poly("x^2"))
    assert digits == [IntPoly([1]), IntPoly([2]), IntPoly([3])]
    digits = phi_adic_expansion(parse_poly("x^3-2"), X)
    assert digits == [IntPoly([1]), IntPoly([]), IntPoly([]), IntPoly([-2])]


def test_phi_adic_errors():
    with pytest.raises(ValueError):
        phi_adic_expansion(parse_poly("x^2+1"), parse_poly("2x+1"))
    with pytest.raises(ValueError):
        phi_adic_expansion(X, parse_poly("x^2"))


def test_phi_adic_recomposition_random():
    rng = seeded_rng(0, "phi-adic")
    for _ in range(400):
        dphi = rng.randrange(1, 4)
        phi = IntPoly([rng.randrange(-9, 10) for _ in range(dphi)] + [1])
        f = IntPoly(
            [rng.randrange(-50, 51) for _ in range(rng.randrange(dphi, 10))] + [1]
        )
        digits = phi_adic_expansion(f, phi)
        length = len(digits) - 1
        recomposed = IntPoly()
        for i, a in enumerate(digits):
            recomposed = recomposed + a * phi ** (length - i)
        assert recomposed == f
        assert all(a.is_zero() or a.degree < phi.degree for a in digits)
        if f.is_monic():
            assert digits[0].is_monic()
