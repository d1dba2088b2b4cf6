import random
from fractions import Fraction

import pytest

from galcert.arith import (
    BallDivisionError,
    ComplexBall,
    Dyadic,
    Rational,
    ball_disjoint,
    dy_div,
    nth_root_upper,
    sqrt_upper,
)
from galcert.poly import UniPoly

from helpers import ball_contains_rational, bisect_root, cplx_add, cplx_div, cplx_mul, dyadic_ball, interval_ball


def test_rational_is_canonical_exact_field():
    rng = random.Random(1)
    for _ in range(200):
        a = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        b = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        c = Fraction(rng.randint(-99, 99), rng.randint(1, 40))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if a != 0:
            assert a * (1 / a) == 1
        for v in (a + b, a * b, a - c):
            assert v.denominator > 0
            from math import gcd as igcd

            assert igcd(abs(v.numerator), v.denominator) == 1
    assert Rational is Fraction


def test_dyadic_roundtrip_and_rounding():
    d = Dyadic(12, -3)
    assert d.to_fraction() == Fraction(3, 2)
    rounded, err = Dyadic(0b101101110111, 0).round_nearest(5)
    exact = Dyadic(0b101101110111, 0)
    assert abs(rounded - exact).to_fraction() <= err.to_fraction()
    up = Dyadic(0b1011011, 0).round_up(3)
    assert up.to_fraction() >= Fraction(0b1011011)


def test_dyadic_division_error_bound():
    a, b = Dyadic(7), Dyadic(3)
    q, err = dy_div(a, b, 64)
    assert abs(q.to_fraction() - Fraction(7, 3)) <= err.to_fraction()


def test_sqrt_and_nth_root_upper_bounds():
    for k in (2, 3, 5, 10, 1000, 12345):
        u = sqrt_upper(Dyadic(k))
        assert u.to_fraction() ** 2 >= k
        for n in (2, 3, 4, 6):
            r = nth_root_upper(Dyadic(k), n)
            assert r.to_fraction() ** n >= k


def test_ball_disjoint_basic():
    a = dyadic_ball(0, rad=Fraction(1, 10))
    b = dyadic_ball(1, rad=Fraction(1, 10))
    assert ball_disjoint(a, b)
    assert ball_disjoint(b, a)
    c = dyadic_ball(0, rad=Fraction(6, 10))
    d = dyadic_ball(1, rad=Fraction(6, 10))
    assert not ball_disjoint(c, d)


def test_ball_disjoint_certified_sqrt2():
    # independent enclosures of +-sqrt(2) by bisection to radius < 1e-20
    f = UniPoly([-2, 0, 1])
    lo, hi = bisect_root(f, 1, 2)
    assert hi - lo < Fraction(1, 10**20)
    pos = interval_ball(lo, hi)
    neg = interval_ball(-hi, -lo)
    assert ball_disjoint(pos, neg)


def test_ball_arithmetic_contains_exact_values():
    rng = random.Random(7)
    for _ in range(60):
        ar = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        ai = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        br = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        bi = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        a = ComplexBall.from_rationals(ar, ai, 64)
        b = ComplexBall.from_rationals(br, bi, 64)
        s = cplx_add((ar, ai), (br, bi))
        p = cplx_mul((ar, ai), (br, bi))
        assert ball_contains_rational(a.add(b, 64), *s)
        assert ball_contains_rational(a.mul(b, 64), *p)
        if br != 0 or bi != 0:
            q = cplx_div((ar, ai), (br, bi))
            try:
                assert ball_contains_rational(a.div(b, 64), *q)
            except BallDivisionError:
                pass  # a fat ball near zero may legitimately refuse


def test_ball_division_by_zero_ball_is_an_error():
    z = dyadic_ball(0, rad=Fraction(1, 100))
    one = ComplexBall.from_int(1)
    with pytest.raises(ZeroDivisionError):
        one.div(z, 64)


def test_disjoint_balls_have_distinct_values():
    rng = random.Random(3)
    for _ in range(40):
        x = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
        y = Fraction(rng.randint(-30, 30), rng.randint(1, 7))
        bx = dyadic_ball(x, rad=Fraction(1, 10**9))
        by = dyadic_ball(y, rad=Fraction(1, 10**9))
        if ball_disjoint(bx, by):
            assert x != y
        if x == y:
            assert not ball_disjoint(bx, by)


def test_scale_and_negate():
    b = dyadic_ball(Fraction(3, 7), rad=Fraction(1, 1000))
    s = b.scale_int(-3, 64)
    assert ball_contains_rational(s, Fraction(-9, 7))
    assert ball_contains_rational(-b, Fraction(-3, 7))
