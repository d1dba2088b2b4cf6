"""Dense univariate and sparse multivariate polynomials over the rationals.

Coefficients are exact (``int`` or ``Fraction``; Python lets the two mix
freely).  Univariate polynomials are coefficient tuples indexed by degree
with no trailing zeros; the zero polynomial has degree ``None``, never -1.
Multivariate polynomials map exponent tuples to nonzero coefficients.
Values are immutable: every operation builds a new polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import ComplexBall


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_dict(cls, d):
        if not d:
            return cls()
        cs = [0] * (max(d) + 1)
        for k, v in d.items():
            cs[k] = v
        return cls(cs)

    @classmethod
    def x_power(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return UniPoly(out)

    def scale(self, c):
        if c == 0:
            return UniPoly()
        return UniPoly([c * k for k in self.coeffs])

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        if len(rem) <= db:
            return UniPoly(), self
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c if lead == 1 else Fraction(c, 1) / lead
            quot[i - db] = q
            for j in range(db + 1):
                rem[i - db + j] -= q * other.coeffs[j]
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return UniPoly([Fraction(c) / lead for c in self.coeffs])

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval_rational(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_ball(self, x: ComplexBall, prec: int) -> ComplexBall:
        """Horner evaluation with outward rounding: the result encloses
        p(z) for every z in the input ball."""
        acc = ComplexBall.from_int(0)
        for c in reversed(self.coeffs):
            cb = ComplexBall.from_rationals(Fraction(c), Fraction(0), prec)
            acc = acc.mul(x, prec).add(cb, prec)
        return acc

    def substitute_scaled(self, lam):
        """Return lam**n * p(x / lam), the root-scaling substitution."""
        n = self.degree
        if n is None:
            return self
        out = []
        power = 1
        for i in range(n, -1, -1):
            out.append(self.coeffs[i] * power)
            power *= lam
        out.reverse()
        return UniPoly(out)

    def has_integer_coeffs(self):
        return all(Fraction(c).denominator == 1 for c in self.coeffs)

    def render(self, var="x"):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(Fraction(c))
            if k == 0:
                body = str(mag)
            else:
                xs = var if k == 1 else f"{var}^{k}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"UniPoly({self.render()})"


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor by Euclid's algorithm."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: UniPoly, b: UniPoly):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = a, b
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


class MultiPoly:
    """Sparse polynomial in n variables: exponent tuple -> coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        if terms:
            self.terms = {e: c for e, c in terms.items() if c != 0}
        else:
            self.terms = {}

    @classmethod
    def const(cls, n, c):
        return cls(n, {(0,) * n: c}) if c != 0 else cls(n)

    @classmethod
    def variable(cls, n, i, c=1):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): c})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"variable-count mismatch: {self.n} vs {other.n}")

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        res = MultiPoly(self.n)
        res.terms = out
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        get = out.get
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                v = get(e, 0) + ca * cb
                if v:
                    out[e] = v
                elif e in out:
                    del out[e]
        res = MultiPoly(self.n)
        res.terms = out
        return res

    def scale(self, c):
        if c == 0:
            return MultiPoly(self.n)
        return MultiPoly(self.n, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k):
        acc = MultiPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=None)

    def lex_leading(self):
        """Leading term under plain lexicographic order, x1 > x2 > ..."""
        e = max(self.terms)
        return e, self.terms[e]

    def grlex_leading(self):
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def permute_vars(self, images):
        """Apply the variable substitution x_i -> x_images[i]."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i, p in enumerate(e):
                ne[images[i]] = p
            out[tuple(ne)] = c
        res = MultiPoly(self.n)
        res.terms = out
        return res

    def eval(self, values):
        """Evaluate at scalars from any exact commutative ring."""
        if len(values) != self.n:
            raise ValueError("value-count mismatch")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, p in zip(values, e):
                for _ in range(p):
                    term = term * v
            total = total + term
        return total

    def coefficients_in_first_var(self):
        """Split by the power of x1: list indexed by that power, entries
        are polynomials in the remaining n-1 variables."""
        if self.is_zero():
            return []
        top = max(e[0] for e in self.terms)
        buckets = [dict() for _ in range(top + 1)]
        for e, c in self.terms.items():
            buckets[e[0]][e[1:]] = c
        return [MultiPoly(self.n - 1, b) for b in buckets]

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for e in sorted(self.terms, key=lambda t: (-sum(t), tuple(-x for x in t))):
            c = self.terms[e]
            mon = "*".join(
                f"x{i + 1}" if p == 1 else f"x{i + 1}^{p}"
                for i, p in enumerate(e)
                if p
            )
            bits.append(f"{c}" if not mon else f"{c}*{mon}")
        return "MultiPoly(" + " + ".join(bits) + ")"
