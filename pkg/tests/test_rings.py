import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exactla.errors import BothZero, DivisionByZero, EmptyInput, ExhaustedCandidates, NotDivisible, ParseError, ZeroElement
from exactla.rings import (
    ZZ,
    Poly,
    PolyFraction,
    PolyRing,
    PrimeField,
    exact_div,
    format_poly,
    gcd_ext,
    is_probable_prime,
    lcm_many,
    parse_ring,
    random_prime,
)
from oracles import is_prime_trial

F5 = PolyRing(5)
x = Poly((0, 1), 5)

ints = st.integers(min_value=-10**30, max_value=10**30)
polys5 = st.lists(st.integers(0, 4), max_size=6).map(lambda cs: Poly(cs, 5))
residues7 = st.integers(0, 6).map(PrimeField(7))


def test_exact_div_examples():
    assert exact_div(ZZ, 6, 3) == 2
    assert exact_div(F5, x * x - 1, x - 1) == x + 1
    with pytest.raises(NotDivisible):
        exact_div(ZZ, 7, 2)
    with pytest.raises(DivisionByZero):
        ZZ.exact_div(1, 0)
    with pytest.raises(NotDivisible):
        F5.exact_div(x * x + 1, x)


def test_gcd_ext_examples():
    assert gcd_ext(ZZ, 2, 3) == (1, -1, 1)
    assert gcd_ext(ZZ, 4, 6) == (2, -1, 1)
    assert gcd_ext(ZZ, 0, 5) == (5, 0, 1)
    g, u, v = ZZ.gcd_ext(-4, -6)
    assert g == 2 and u * -4 + v * -6 == 2
    with pytest.raises(BothZero):
        ZZ.gcd_ext(0, 0)


def test_poly_gcd_is_monic():
    a = (x - 1) * (x + 2) * 3
    b = (x - 1) * (x * x + 2) * 2  # x^2 + 2 is irreducible mod 5
    g, u, v = F5.gcd_ext(a, b)
    assert g == x - 1
    assert u * a + v * b == g


def test_lcm_examples():
    assert lcm_many(ZZ, [4, 6]) == 12
    assert lcm_many(ZZ, [1, 1, 1]) == 1
    assert lcm_many(F5, [x, x * x]) == x * x
    with pytest.raises(EmptyInput):
        ZZ.lcm_many([])
    with pytest.raises(ZeroElement):
        ZZ.lcm_many([3, 0])


def test_random_prime_int_is_prime():
    rng = random.Random(1)
    for _ in range(20):
        p = random_prime(ZZ, rng, 16)
        assert p.bit_length() == 16
        assert is_prime_trial(p)
    with pytest.raises(ValueError):
        ZZ.random_prime(rng, 1)


def test_random_prime_poly_is_monic_linear():
    F7 = PolyRing(7)
    p = F7.random_prime(random.Random(3))
    assert p.degree == 1 and p.lc == 1
    with pytest.raises(ExhaustedCandidates):
        F7.random_prime(random.Random(3), exclude=range(7))


def test_primality_matches_trial_division():
    for n in range(-5, 5000):
        assert is_probable_prime(n) == is_prime_trial(n), n
    assert is_probable_prime(2**61 - 1)
    assert not is_probable_prime(2**61 + 1)


def test_poly_canonical_form():
    assert Poly((1, 2, 0, 0), 5).coeffs == (1, 2)
    assert Poly((5, 10), 5) == F5.zero
    assert F5.zero.degree == -1
    assert (-Poly((0, 1), 5)).coeffs == (0, 4)
    assert -F5.zero == F5.zero


def test_poly_text_round_trip():
    f = Poly((4, 0, 1), 5)
    assert format_poly(f) == "4+x^2"
    assert F5.parse("4+x^2") == f
    assert F5.parse("2*x+3*x^2-1") == Poly((4, 2, 3), 5)
    assert F5.parse("-x") == Poly((0, 4), 5)
    assert F5.parse("0") == F5.zero
    assert F5.parse("3x") == F5.parse("3*x")
    for bad in ("", "x^", "2*", "y", "x^-1"):
        with pytest.raises(ParseError):
            F5.parse(bad)


def test_int_parse():
    assert ZZ.parse("-12") == -12
    assert ZZ.parse("+7") == 7
    with pytest.raises(ParseError):
        ZZ.parse("1.5")


def test_parse_ring():
    assert parse_ring("z") is ZZ
    assert parse_ring("polymod=7") == PolyRing(7)
    with pytest.raises(ParseError):
        parse_ring("polymod=8")
    with pytest.raises(ParseError):
        parse_ring("q")


def test_poly_fraction_reduced_monic():
    q = F5.fraction(x * x - 1, (x - 1) * 2)
    assert q.denominator == F5.one
    assert q.numerator == (x + 1) * 3
    r = PolyFraction(x, x * x * 3)
    assert r.denominator == x and r.denominator.lc == 1
    assert F5.format_fraction(F5.fraction(x + 1, x)) == "(1+x)/x"
    assert F5.format_fraction(F5.fraction(x, F5.one)) == "x"


def test_int_fraction_format():
    assert ZZ.format_fraction(Fraction(6, -4)) == "-3/2"
    assert ZZ.format_fraction(Fraction(4, 2)) == "2"


@given(residues7, residues7, residues7)
def test_prime_field_axioms(a, b, c):
    F = a.__class__
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if b:
        assert (a * b) / b == a
        assert b * b.inverse() == 1


@given(polys5, polys5, polys5)
@settings(max_examples=200)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == F5.zero
    if a and b:
        assert a * b
        assert F5.exact_div(a * b, b) == a


@given(ints, ints)
def test_int_gcd_ext_bezout(a, b):
    if a == 0 and b == 0:
        return
    g, u, v = ZZ.gcd_ext(a, b)
    assert g >= 0 and u * a + v * b == g
    assert a % g == 0 and b % g == 0


@given(st.lists(st.integers(-10**6, 10**6).filter(bool), min_size=1, max_size=5))
def test_lcm_divisibility(elems):
    L = ZZ.lcm_many(elems)
    prod = 1
    for e in elems:
        assert L % e == 0
        prod *= e
    assert prod % L == 0


@given(st.lists(polys5.filter(bool), min_size=1, max_size=4))
@settings(max_examples=100)
def test_poly_lcm_divisibility(elems):
    L = F5.lcm_many(elems)
    prod = F5.one
    for e in elems:
        assert not L.divmod(e)[1]
        prod = prod * e
    assert not prod.divmod(L)[1]
    assert L.lc == 1


@given(polys5, polys5.filter(bool), polys5, polys5.filter(bool))
@settings(max_examples=150)
def test_poly_fraction_arithmetic(a, b, c, d):
    # compare against evaluation at every point where both denominators are nonzero
    s = PolyFraction(a, b) + PolyFraction(c, d)
    p = PolyFraction(a, b) * PolyFraction(c, d)
    for t in range(5):
        if b(t) and d(t) and s.denominator(t) and p.denominator(t):
            inv = lambda v: pow(v, -1, 5)
            assert s.numerator(t) * inv(s.denominator(t)) % 5 == (a(t) * inv(b(t)) + c(t) * inv(d(t))) % 5
            assert p.numerator(t) * inv(p.denominator(t)) % 5 == a(t) * inv(b(t)) * c(t) * inv(d(t)) % 5
