import random
from fractions import Fraction

import pytest

from galcert.groups import Permutation, symmetric_group
from galcert.numberfield import NumberField, compose_mod, nf_inverse
from galcert.poly import UniPoly
from galcert.selftest import corpus_pipeline


def sqrt2_field():
    return NumberField(UniPoly([-2, 0, 1]))


def test_inverse_examples():
    K = sqrt2_field()
    assert nf_inverse(K.one()) == K.one()
    root = K.gen()
    assert nf_inverse(root) == K.element([0, Fraction(1, 2)])
    assert nf_inverse(K.one() + root) == K.element([-1, 1])
    assert (K.one() + root) * K.element([-1, 1]) == K.one()


def test_inverse_of_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        nf_inverse(sqrt2_field().zero())


def test_field_arithmetic_and_powers():
    K = sqrt2_field()
    a = K.gen()
    assert a * a == K.rational(2)
    assert (a + 1) * (a - 1) == K.rational(1)
    assert a**3 == 2 * a
    assert (a / a) == K.one()


def test_express_roots_quadratic():
    data = corpus_pipeline("x^2 - 2")
    # enclosures sorted by real part: negative root first
    assert [r.render() for r in data.roots] == ["-a", "a"]


def test_express_roots_cyclotomic_powers():
    data = corpus_pipeline("x^4 + 1")
    K = data.roots[0].field
    first = data.roots[0]
    for r in data.roots:
        assert r**4 == K.rational(-1)
    expected = {first, first**3, -first, -(first**3)}
    assert set(data.roots) == expected


def test_express_roots_cubic_exact_identities():
    data = corpus_pipeline("x^3 - 2")
    K = data.roots[0].field
    f = data.f
    total = K.zero()
    prod = K.one()
    for r in data.roots:
        assert compose_mod(f, r).is_zero()
        total = total + r
        prod = prod * r
    assert total == K.rational(-f[2])
    assert prod == K.rational((-1) ** 3 * f[0])


def test_automorphisms_quadratic():
    data = corpus_pipeline("x^2 - 2")
    sf = data.sf
    K = sf.field
    ident = Permutation((0, 1))
    swap = Permutation((1, 0))
    assert sf.psi_for(ident) == K.gen()
    assert sf.psi_for(swap) == -K.gen()
    assert sf.apply(swap, data.roots[0]) == data.roots[1]
    assert sf.apply(swap, data.roots[1]) == data.roots[0]


def test_automorphisms_cubic_realize_s3():
    data = corpus_pipeline("x^3 - 2")
    sf = data.sf
    perms = {p for p, _ in sf.automorphisms}
    assert perms == set(symmetric_group(3).elements)
    for p, _ in sf.automorphisms:
        for i, r in enumerate(data.roots):
            assert sf.apply(p, r) == data.roots[p(i)]


def test_automorphism_is_a_ring_homomorphism():
    data = corpus_pipeline("x^3 - 2")
    sf = data.sf
    K = sf.field
    rng = random.Random(19)
    elems = [
        K.element([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(K.degree)])
        for _ in range(6)
    ]
    for p, _ in sf.automorphisms:
        for a in elems[:3]:
            for b in elems[3:]:
                assert sf.apply(p, a * b) == sf.apply(p, a) * sf.apply(p, b)
                assert sf.apply(p, a + b) == sf.apply(p, a) + sf.apply(p, b)
        assert sf.apply(p, K.rational(Fraction(7, 3))) == K.rational(Fraction(7, 3))


def test_automorphism_composition_closure():
    data = corpus_pipeline("x^3 - 2")
    sf = data.sf
    K = sf.field
    basis = [K.element([0] * k + [1]) for k in range(K.degree)]
    for p, _ in sf.automorphisms:
        for q, _ in sf.automorphisms:
            combined = p * q
            for b in basis:
                assert sf.apply(p, sf.apply(q, b)) == sf.apply(combined, b)


def test_generator_identity_element():
    data = corpus_pipeline("x^3 - 2")
    sf = data.sf
    ident = Permutation.identity(3)
    assert sf.psi_for(ident) == sf.field.gen()


def test_matrix_agrees_with_apply():
    data = corpus_pipeline("x^2 - 2")
    sf = data.sf
    swap = Permutation((1, 0))
    mat = sf.matrix(swap)
    x = sf.field.element([Fraction(3), Fraction(5)])
    applied = sf.apply(swap, x)
    coords = [sum(mat[i][j] * Fraction(x.coeffs[j]) for j in range(2)) for i in range(2)]
    assert list(applied.coeffs) == coords
