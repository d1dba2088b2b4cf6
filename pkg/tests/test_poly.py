import random
from fractions import Fraction

import pytest

from galcert.arith import ComplexBall
from galcert.poly import MultiPoly, UniPoly, gcd, xgcd
from galcert.resolvent import ResolventSpec, resolvent_poly

from helpers import ball_contains_rational, bisect_root, interval_ball


def P(*coeffs):
    return UniPoly(coeffs)


def rand_poly(rng, max_deg=6):
    return UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(1, max_deg + 1))])


def test_divmod_examples():
    q, r = divmod(P(-1, 0, 1), P(-1, 1))
    assert q == P(1, 1) and r.is_zero()
    q, r = divmod(P(-2, 0, 0, 1), P(0, 0, 1))
    assert q == P(0, 1) and r == P(-2)


def test_divmod_resolvent_by_its_min_poly():
    f = P(-2, 0, 1)
    resolvent = resolvent_poly(f, ResolventSpec((1, 0)))
    assert resolvent == f
    q, r = divmod(resolvent, f)
    assert q == P(1) and r.is_zero()


def test_divmod_round_trip():
    rng = random.Random(11)
    for _ in range(80):
        a = rand_poly(rng)
        b = rand_poly(rng)
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert b * q + r == a
        assert r.is_zero() or r.degree < b.degree


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        divmod(P(1, 1), P())


def test_gcd_examples():
    assert gcd(P(-1, 0, 1), P(-1, 1)) == P(-1, 1)
    # Euclid by hand: x^3 - 2 = (x/3) * 3x^2 - 2; then 3x^2 and -2 are coprime
    assert gcd(P(-2, 0, 0, 1), P(0, 0, 3)) == P(1)
    f = P(1, -1) * P(1, -1)
    assert gcd(f, f.derivative()) == P(-1, 1).monic()


def test_gcd_divides_both():
    rng = random.Random(13)
    for _ in range(50):
        a, b = rand_poly(rng, 4), rand_poly(rng, 4)
        if a.is_zero() and b.is_zero():
            continue
        g = gcd(a, b) if not (a.is_zero() and b.is_zero()) else None
        for p in (a, b):
            if not p.is_zero():
                assert (p % g).is_zero()


def test_gcd_of_two_zeros_is_an_error():
    with pytest.raises(ValueError):
        gcd(P(), P())


def test_xgcd_bezout():
    rng = random.Random(17)
    for _ in range(30):
        a, b = rand_poly(rng, 4), rand_poly(rng, 4)
        if a.is_zero() or b.is_zero():
            continue
        g, s, t = xgcd(a, b)
        assert s * a + t * b == g


def test_degree_sentinel_is_none():
    assert P().degree is None
    assert P(5).degree == 0
    assert P(0, 1).degree == 1


def test_eval_ball_examples():
    f = P(-2, 0, 1)
    v = f.eval_ball(ComplexBall.from_int(0), 64)
    assert ball_contains_rational(v, -2)

    lo, hi = bisect_root(f, 1, 2, steps=60)
    enclosure = interval_ball(lo, hi)
    near_zero = f.eval_ball(enclosure, 128)
    assert near_zero.contains_zero()
    assert near_zero.rad.to_fraction() < Fraction(1, 10**12)

    five = P(5).eval_ball(interval_ball(-3, 17), 64)
    assert ball_contains_rational(five, 5)
    assert five.rad.is_zero()


def test_substitute_scaled():
    f = P(Fraction(-1, 2), 0, 1)
    assert f.substitute_scaled(2) == P(-2, 0, 1)


def test_render_is_parseable_text():
    assert P(-2, 0, 0, 1).render() == "x^3 - 2"
    assert P(1, 0, 1).render() == "x^2 + 1"
    assert P(Fraction(1, 2), -1).render() == "-x + 1/2"


# -- multivariate ------------------------------------------------------------

def test_multipoly_products():
    x1 = MultiPoly.variable(2, 0)
    x2 = MultiPoly.variable(2, 1)
    assert (x1 + x2) * (x1 - x2) == MultiPoly(2, {(2, 0): 1, (0, 2): -1})
    e1 = x1 + x2
    assert e1 * e1 == MultiPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    p = MultiPoly(2, {(3, 1): 5, (0, 2): -2})
    assert (p + (-p)).is_zero()
    assert (p + (-p)).terms == {}


def test_multipoly_variable_count_mismatch():
    with pytest.raises(ValueError):
        MultiPoly.variable(2, 0) * MultiPoly.variable(3, 0)


def test_multipoly_ring_axioms():
    rng = random.Random(23)

    def rand_mp():
        n = 3
        terms = {}
        for _ in range(rng.randint(1, 4)):
            e = tuple(rng.randint(0, 2) for _ in range(n))
            terms[e] = rng.randint(-4, 4)
        return MultiPoly(n, terms)

    for _ in range(60):
        a, b, c = rand_mp(), rand_mp(), rand_mp()
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a + b == b + a


def test_multipoly_orders():
    p = MultiPoly(2, {(1, 2): 1, (2, 0): 1, (0, 1): 7})
    assert p.lex_leading() == ((2, 0), 1)
    assert p.grlex_leading() == ((1, 2), 1)
    q = MultiPoly(2, {(2, 1): 1, (2, 0): 1})
    assert q.grlex_leading() == ((2, 1), 1)
    assert q.lex_leading() == ((2, 1), 1)
