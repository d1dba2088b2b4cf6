import random
from fractions import Fraction

import pytest

from galcert.arith import ComplexBall, ball_disjoint
from galcert.errors import InputError
from galcert.poly import UniPoly, gcd
from galcert.roots import isolate_roots, reconstruct_rational

from helpers import ball_contains_rational, bisect_root, dyadic_ball


def test_isolate_sqrt2():
    rs = isolate_roots(UniPoly([-2, 0, 1]), 128)
    assert len(rs.enclosures) == 2
    lo, hi = bisect_root(UniPoly([-2, 0, 1]), 1, 2)
    neg, pos = rs.enclosures
    for ball, (a, b) in ((pos, (lo, hi)), (neg, (-hi, -lo))):
        assert abs(ball.im) <= ball.rad
        center = ball.re.to_fraction()
        assert a - ball.rad.to_fraction() <= center <= b + ball.rad.to_fraction()
        assert ball.rad.to_fraction() <= Fraction(1, 2**128)


def test_isolate_i():
    rs = isolate_roots(UniPoly([1, 0, 1]), 128)
    ims = sorted(b.im.to_fraction() for b in rs.enclosures)
    rad = max(b.rad.to_fraction() for b in rs.enclosures)
    assert abs(ims[0] + 1) <= rad and abs(ims[1] - 1) <= rad
    for b in rs.enclosures:
        assert abs(b.re) <= b.rad


def test_isolate_cbrt2():
    f = UniPoly([-2, 0, 0, 1])
    rs = isolate_roots(f, 128)
    real = [b for b in rs.enclosures if abs(b.im) <= b.rad]
    cplx = [b for b in rs.enclosures if abs(b.im) > b.rad]
    assert len(real) == 1 and len(cplx) == 2
    lo, hi = bisect_root(f, 1, 2)
    center = real[0].re.to_fraction()
    assert lo - real[0].rad.to_fraction() <= center <= hi + real[0].rad.to_fraction()
    # complex pair mirrors across the real axis
    a, b = cplx
    assert abs(a.re.to_fraction() - b.re.to_fraction()) <= 2 * a.rad.to_fraction()
    assert abs(a.im.to_fraction() + b.im.to_fraction()) <= 2 * a.rad.to_fraction()


def test_isolation_rejects_bad_input():
    with pytest.raises(InputError, match="squarefree"):
        isolate_roots(UniPoly([1, -2, 1]))
    with pytest.raises(InputError, match="monic"):
        isolate_roots(UniPoly([-2, 0, 2]))
    with pytest.raises(InputError, match="degree"):
        isolate_roots(UniPoly([5]))


def test_enclosures_pairwise_disjoint_and_vieta():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randint(2, 5)
        f = UniPoly([rng.randint(-8, 8) for _ in range(n)] + [1])
        if f.degree != n or gcd(f, f.derivative()).degree != 0:
            continue
        rs = isolate_roots(f, 80)
        balls = rs.enclosures
        for i in range(n):
            for j in range(i + 1, n):
                assert ball_disjoint(balls[i], balls[j])
        prec = 400
        total = ComplexBall.from_int(0)
        prod = ComplexBall.from_int(1)
        for b in balls:
            total = total.add(b, prec)
            prod = prod.mul(b, prec)
        assert ball_contains_rational(total, -Fraction(f[n - 1]))
        assert ball_contains_rational(prod, Fraction((-1) ** n * f[0]))


def test_rational_roots_recovered():
    # monic with rational roots: denominators allowed via rational coefficients
    roots = [Fraction(1, 2), Fraction(-3), Fraction(5, 3)]
    f = UniPoly([1])
    for r in roots:
        f = f * UniPoly([-r, 1])
    rs = isolate_roots(f, 96)
    got = {reconstruct_rational(b, 6) for b in rs.enclosures}
    assert got == set(roots)


def test_refine_preserves_roots_and_order():
    f = UniPoly([-2, 0, 0, 1])
    rs = isolate_roots(f, 64)
    fine = rs.refine(256)
    assert fine.precision_bits == 256
    for old, new in zip(rs.enclosures, fine.enclosures):
        assert not ball_disjoint(old, new)
        assert new.rad.to_fraction() <= Fraction(1, 2**256)
    for i, new in enumerate(fine.enclosures):
        for j, old in enumerate(rs.enclosures):
            if i != j:
                assert ball_disjoint(new, old)


def test_reconstruct_rational_examples():
    near_half = dyadic_ball(Fraction(4999999999, 10**10), rad=Fraction(1, 10**8))
    assert reconstruct_rational(near_half, 10) == Fraction(1, 2)

    wide = dyadic_ball(Fraction(3333, 10**4), rad=Fraction(1, 10))
    assert reconstruct_rational(wide, 10) is None

    # numeric discriminant of x^3 - 2, reconstructed at denominator bound 1
    rs = isolate_roots(UniPoly([-2, 0, 0, 1]), 96)
    prec = 400
    disc = ComplexBall.from_int(1)
    balls = rs.enclosures
    for i in range(3):
        for j in range(i + 1, 3):
            d = balls[i].sub(balls[j], prec)
            disc = disc.mul(d, prec).mul(d, prec)
    assert reconstruct_rational(disc, 1) == -108


def test_reconstruct_needs_imaginary_straddling_zero():
    off_axis = dyadic_ball(Fraction(1, 2), im=Fraction(1, 4), rad=Fraction(1, 100))
    assert reconstruct_rational(off_axis, 10) is None


def test_reconstruct_bound_validation():
    with pytest.raises(InputError):
        reconstruct_rational(dyadic_ball(0, rad=Fraction(1, 100)), 0)


def test_isolation_survives_float_overflow():
    # coefficients beyond float range force the dyadic seeding path
    f = UniPoly([-(10**400), 0, 1])
    rs = isolate_roots(f, 96)
    centers = sorted(b.re.to_fraction() for b in rs.enclosures)
    for c, expected in zip(centers, (-(10**200), 10**200)):
        assert abs(c - expected) <= max(b.rad.to_fraction() for b in rs.enclosures)
