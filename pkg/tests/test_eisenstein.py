import math

import pytest

from dedcrit.criterion import local_maximality
from dedcrit.eisenstein import (
    is_eisenstein_at,
    is_eisenstein_wrt,
    power_basis_generator,
)
from dedcrit.fppoly import is_irreducible_mod_p, reduce_mod_p
from dedcrit.intpoly import IntPoly, parse_poly
from dedcrit.seeding import seeded_rng

X = IntPoly((0, 1))


def test_eisenstein_examples():
    assert is_eisenstein_at(parse_poly("x^3-2"), 2) is True
    assert is_eisenstein_at(parse_poly("x^2-4"), 2) is False
    assert is_eisenstein_at(parse_poly("x^2+2x+2"), 2) is True
    assert is_eisenstein_at(parse_poly("x^2+2x+6"), 3) is False
    assert is_eisenstein_at(parse_poly("x^2+x"), 2) is False  # zero constant term


def test_eisenstein_errors():
    with pytest.raises(ValueError):
        is_eisenstein_at(IntPoly([2]), 2)
    with pytest.raises(ValueError):
        is_eisenstein_at(parse_poly("2x^2+2"), 2)
    with pytest.raises(ValueError):
        is_eisenstein_at(parse_poly("x^2+2"), 4)


def test_eisenstein_wrt_examples():
    phi = parse_poly("x^2+1")
    assert is_eisenstein_wrt(phi * phi + IntPoly([3]), phi, 3) is True
    assert is_eisenstein_wrt(parse_poly("x^3-2"), X, 2) is True
    assert is_eisenstein_wrt(phi * phi + IntPoly([9]), phi, 3) is False


def test_eisenstein_wrt_hypothesis_errors():
    phi = parse_poly("x^2+1")
    # x^2+1 is not irreducible mod 5
    with pytest.raises(ValueError, match="irreducible"):
        is_eisenstein_wrt(phi * phi + IntPoly([5]), phi, 5)
    # f is not a power of phi mod 3
    with pytest.raises(ValueError, match="power of phi"):
        is_eisenstein_wrt(parse_poly("x^4+x+3"), phi, 3)
    with pytest.raises(ValueError, match="monic"):
        is_eisenstein_wrt(parse_poly("x^4+3"), parse_poly("2x^2+1"), 3)


def test_eisenstein_wrt_reduces_to_plain_for_phi_x():
    rng = seeded_rng(0, "phi-x-reduction")
    for _ in range(300):
        p = rng.choice([2, 3, 5, 7])
        deg = rng.randrange(1, 6)
        # force fbar = x^deg so the hypothesis of the phi test holds
        coeffs = [p * rng.randrange(-6, 7) for _ in range(deg)] + [1]
        f = IntPoly(coeffs)
        assert is_eisenstein_wrt(f, X, p) == is_eisenstein_at(f, p), (f, p)


def _phi_eisenstein_instance(rng):
    p = rng.choice([2, 3, 5, 7])
    dphi = rng.choice([1, 2, 3])
    while True:
        phi = IntPoly([rng.randrange(p) for _ in range(dphi)] + [1])
        if is_irreducible_mod_p(reduce_mod_p(phi, p)):
            break
    length = rng.randrange(2, 5)
    f = phi**length
    for i in range(1, length):
        digit = IntPoly([p * rng.randrange(-3, 4) for _ in range(dphi)])
        f = f + digit * phi ** (length - i)
    while True:
        last = [p * rng.randrange(-3, 4) for _ in range(dphi)]
        last[rng.randrange(dphi)] = p * rng.choice([c for c in range(-5, 6) if c % p != 0])
        if any(last):
            break
    f = f + IntPoly(last)
    return f, phi, p


def test_generated_phi_eisenstein_instances():
    rng = seeded_rng(0, "phi-eisenstein-unit")
    for _ in range(40):
        f, phi, p = _phi_eisenstein_instance(rng)
        assert is_eisenstein_wrt(f, phi, p) is True
        assert local_maximality(f, p).locally_maximal, (f, phi, p)


def test_power_basis_examples():
    theta = power_basis_generator(2, 1, 2)
    assert (theta.s, theta.t) == (1, 0)
    assert theta.description == "theta = alpha^1 / 2^0"
    theta = power_basis_generator(3, 2, 2)
    assert (theta.s, theta.t) == (2, 1)
    theta = power_basis_generator(5, 3, 3)
    assert (theta.s, theta.t) == (2, 1)


def test_power_basis_errors():
    with pytest.raises(ValueError):
        power_basis_generator(4, 2, 2)
    with pytest.raises(ValueError):
        power_basis_generator(1, 1, 2)
    with pytest.raises(ValueError):
        power_basis_generator(3, 2, 4)


def test_power_basis_identity_grid():
    for n in range(2, 51):
        for m in range(1, 51):
            if math.gcd(m, n) != 1:
                continue
            theta = power_basis_generator(n, m, 2)
            assert theta.m * theta.s - theta.n * theta.t == 1
            assert 0 <= theta.s < n
