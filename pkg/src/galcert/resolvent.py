"""Resolvent machinery: injective weight search, the exact degree-n!
resolvent polynomial, and identification of the Galois group.

A weight vector turns the roots into n! linear-combination values, one per
permutation; once those are certified pairwise distinct, any one of them
generates the splitting field.  The resolvent polynomial (the product of
x minus each value) is computed exactly: its coefficients are symmetric
in the roots, so they decompose into elementary symmetric polynomials and
evaluate at the input's coefficients.

The group is found without factoring over Q: subgroups are enumerated by
ascending order and each candidate product of linear factors is
reconstructed to integer coefficients, checked to divide the resolvent
exactly, and each claimed root is certified via the cofactor (if the
cofactor provably misses a value that the full product kills, the
candidate must kill it).  Any subgroup passing all of that contains the
Galois group, so the first hit is the group and its candidate is the
minimal polynomial, irreducible by minimality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .arith import ComplexBall, ball_disjoint, pow2
from .errors import CertificationError, InputError
from .groups import PermGroup, Permutation, all_subgroups, symmetric_group
from .poly import MultiPoly, UniPoly
from .roots import RootSystem
from .sympoly import decompose, substitute_elementary

_PREC_CAP = 1 << 16


@dataclass(frozen=True)
class ResolventSpec:
    """Integer weights making the root combination injective over all
    permutations (certified by the producer)."""

    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))


@dataclass(frozen=True)
class GaloisData:
    spec: ResolventSpec
    min_poly: UniPoly
    gen_ball: ComplexBall
    group: PermGroup
    resolvent: UniPoly


def conjugate_balls(spec: ResolventSpec, rs: RootSystem):
    """Ball of the weighted root combination for every permutation,
    keyed by permutation, at the root system's precision."""
    n = len(spec.weights)
    prec = rs.precision_bits + 32
    out = {}
    for sigma in symmetric_group(n):
        acc = ComplexBall.from_int(0)
        for i, w in enumerate(spec.weights):
            if w:
                acc = acc.add(rs.enclosures[sigma(i)].scale_int(w, prec), prec)
        out[sigma] = acc
    return out


def certify_distinct_values(weights, rs: RootSystem, cap: int = _PREC_CAP):
    """True (with certificate) if all n! values are pairwise distinct;
    refines the root system as needed, giving up at the precision cap."""
    cur = rs
    while True:
        vals = list(conjugate_balls(ResolventSpec(weights), cur).values())
        ok = True
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                if not ball_disjoint(vals[i], vals[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True, cur
        nxt = cur.precision_bits * 2
        if nxt > cap:
            return False, cur
        cur = cur.refine(nxt)


def search_resolvent(rs: RootSystem, max_norm: int = 8, skip: int = 0) -> ResolventSpec:
    """Smallest weight vector (by max-norm, then lexicographically) whose
    n! values are certified pairwise distinct.  skip returns later hits."""
    n = rs.poly.degree
    found = 0
    cur = rs
    # a candidate that cannot be separated at 4096 bits is hopeless at
    # this height scale; rejecting it early never certifies a falsehood
    search_cap = 4096
    for norm in range(1, max_norm + 1):
        for weights in iter_product(range(norm + 1), repeat=n):
            if max(weights) != norm:
                continue
            # a repeated weight makes two permutations collide for sure
            if len(set(weights)) != n:
                continue
            ok, cur = certify_distinct_values(weights, cur, cap=search_cap)
            if ok:
                if found == skip:
                    return ResolventSpec(weights)
                found += 1
    raise CertificationError(
        f"no injective weight vector with max-norm <= {max_norm}"
    )


def resolvent_poly(f: UniPoly, spec: ResolventSpec) -> UniPoly:
    """The exact degree-n! product of (x - weighted root combination)
    over all permutations, with the roots eliminated symbolically."""
    n = f.degree
    if n is None or n < 1:
        raise InputError("degree must be at least 1")
    if n > 4:
        raise InputError("resolvent construction is limited to degree <= 4")
    if len(spec.weights) != n:
        raise InputError("weight count must match the degree")
    if not f.is_monic():
        raise InputError("polynomial must be monic")

    nv = n + 1  # variable 0 is the resolvent indeterminate
    acc = MultiPoly.const(nv, 1)
    x0 = (1,) + (0,) * n
    for sigma in symmetric_group(n):
        terms = {x0: 1}
        for i, w in enumerate(spec.weights):
            if w:
                e = [0] * nv
                e[sigma(i) + 1] = 1
                key = tuple(e)
                terms[key] = terms.get(key, 0) - w
        acc = acc * MultiPoly(nv, terms)

    e_values = [(-1) ** j * f[n - j] for j in range(1, n + 1)]
    coeffs = []
    for piece in acc.coefficients_in_first_var():
        if piece.is_zero():
            coeffs.append(0)
        elif piece.total_degree() == 0:
            coeffs.append(piece.terms[(0,) * n])
        else:
            coeffs.append(substitute_elementary(decompose(piece), e_values))
    return UniPoly(coeffs)


def _ball_poly_product(balls, prec):
    """Coefficient balls of the monic product of (x - b) over the given
    balls, ascending order."""
    coeffs = [ComplexBall.from_int(1)]
    for b in balls:
        nxt = [ComplexBall.from_int(0) for _ in range(len(coeffs) + 1)]
        for i, c in enumerate(coeffs):
            nxt[i] = nxt[i].sub(c.mul(b, prec), prec)
            nxt[i + 1] = nxt[i + 1].add(c, prec)
        coeffs = nxt
    return coeffs


def _reconstruct_integer(ball):
    """(value, definite): value None if no integer lies in the ball;
    definite=False means the ball is too wide to decide."""
    if ball.rad >= pow2(-1):
        return None, False
    if abs(ball.im) > ball.rad:
        return None, True
    k = ball.re.nearest_int()
    diff = ball.re - pow2(0) * k
    if abs(diff) > ball.rad:
        return None, True
    return k, True


def identify_galois(f: UniPoly, spec: ResolventSpec, rs: RootSystem) -> GaloisData:
    """Minimal-subgroup search for the Galois group with exact division
    and cofactor certificates; returns group, minimal polynomial and the
    ball of the distinguished generator value."""
    n = f.degree
    if n is None or n < 1 or n > 4:
        raise InputError("degree must be between 1 and 4")
    if not f.has_integer_coeffs():
        raise InputError(
            "integer coefficients required; scale the variable first"
        )
    resolvent = resolvent_poly(f, spec)
    identity = Permutation.identity(n)
    cur = rs

    for sub in all_subgroups(symmetric_group(n)):
        result = _test_subgroup(resolvent, sub, spec, cur, identity)
        if result is None:
            continue
        min_poly, cur = result
        vals = conjugate_balls(spec, cur)
        return GaloisData(
            spec=spec,
            min_poly=min_poly,
            gen_ball=vals[identity],
            group=sub,
            resolvent=resolvent,
        )
    raise CertificationError(
        "no subgroup produced a certified rational factor; "
        "this indicates a bug or insufficient precision"
    )


def _test_subgroup(resolvent, sub, spec, rs, identity):
    """None if the subgroup is rejected; else (min_poly, refined rs)."""
    cur = rs
    while True:
        prec = cur.precision_bits + 32
        vals = conjugate_balls(spec, cur)
        coeff_balls = _ball_poly_product([vals[s] for s in sub], prec)
        ints = []
        widen = False
        for cb in coeff_balls[:-1]:
            k, definite = _reconstruct_integer(cb)
            if not definite:
                widen = True
                break
            if k is None:
                return None
            ints.append(k)
        if not widen:
            candidate = UniPoly(ints + [1])
            quotient, remainder = divmod(resolvent, candidate)
            if not remainder.is_zero():
                return None
            # cofactor certificate: resolvent kills each claimed value and
            # the cofactor provably does not, so the candidate must
            certified = True
            for s in sub:
                q_val = quotient.eval_ball(vals[s], prec)
                if q_val.contains_zero():
                    certified = False
                    break
            if certified:
                return candidate, cur
        nxt = cur.precision_bits * 2
        if nxt > _PREC_CAP:
            return None
        cur = cur.refine(nxt)
