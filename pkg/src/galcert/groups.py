"""Permutation groups on root indices and arrangement machinery.

Permutations compose left to right as functions: (p * q)(i) = p(q(i)).
An arrangement is an ordering of the root indices; the group action on
arrangements is (p . a)(i) = a(p^-1(i)), a left action, so acting by p
then q equals acting by q * p ... by (q * p).  Blocks of the arrangement
array record the coset representative used to build them, which is the
conjugator relating the block's substitution group back to the subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(self.images[other.images[i]] for i in range(self.n))

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def cycles(self):
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self, labels=None):
        cyc = self.cycles()
        if not cyc:
            return "id"
        if labels is None:
            return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cyc)
        return "".join("(" + "".join(labels[i] for i in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation{self.images}"


class PermGroup:
    """Canonical sorted set of permutations; validated to be a group."""

    __slots__ = ("elements",)

    def __init__(self, elements):
        elems = sorted(set(elements))
        if not elems:
            raise ValueError("a group needs at least the identity")
        n = elems[0].n
        if any(p.n != n for p in elems):
            raise ValueError("mixed degrees")
        eset = set(elems)
        if Permutation.identity(n) not in eset:
            raise ValueError("identity missing")
        for p in elems:
            if p.inverse() not in eset:
                raise ValueError(f"inverse of {p} missing")
            for q in elems:
                if p * q not in eset:
                    raise ValueError(f"not closed: {p} * {q} outside the set")
        self.elements = tuple(elems)

    @property
    def n(self):
        return self.elements[0].n

    @property
    def order(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return p in set(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, PermGroup) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        big = set(other.elements)
        return all(p in big for p in self.elements)

    def sort_key(self):
        return (self.order, tuple(p.images for p in self.elements))

    def __repr__(self):
        return f"PermGroup(order={self.order}, {[p.cycle_string() for p in self.elements]})"


def closure(generators, n=None) -> PermGroup:
    """Smallest group containing the generators (product fixpoint)."""
    gens = list(generators)
    if not gens:
        if n is None:
            raise ValueError("empty generator set needs an explicit degree")
        return PermGroup([Permutation.identity(n)])
    deg = gens[0].n
    if any(g.n != deg for g in gens):
        raise ValueError("mixed degrees")
    if n is not None and n != deg:
        raise ValueError("degree mismatch")
    elems = {Permutation.identity(deg)}
    frontier = list(elems)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return PermGroup(elems)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> PermGroup:
    return PermGroup([Permutation(p) for p in permutations(range(n))])


_SUBGROUP_CACHE: dict = {}


def all_subgroups(g: PermGroup):
    """Every subgroup of g, each once, sorted by order then element list.

    Found by closing all generator subsets of size <= 3 (ample for any
    group of order <= 24) and deduplicating.
    """
    if g.order > 24:
        raise ValueError(f"group order {g.order} exceeds the cap of 24")
    key = g.elements
    cached = _SUBGROUP_CACHE.get(key)
    if cached is not None:
        return cached
    seen = {}
    elems = g.elements
    seen_key = frozenset([Permutation.identity(g.n)])
    seen[seen_key] = PermGroup([Permutation.identity(g.n)])
    for size in (1, 2, 3):
        for gens in combinations(elems, size):
            sub = closure(gens)
            k = frozenset(sub.elements)
            if k not in seen:
                seen[k] = sub
    result = sorted(seen.values(), key=PermGroup.sort_key)
    _SUBGROUP_CACHE[key] = result
    return result


@dataclass(frozen=True)
class Arrangement:
    """One ordering of the n root indices (a row of the array)."""

    order: tuple

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"not an arrangement: {self.order}")

    @property
    def n(self):
        return len(self.order)

    def act(self, p: Permutation) -> "Arrangement":
        inv = p.inverse()
        return Arrangement(tuple(self.order[inv(i)] for i in range(self.n)))

    def labels(self, alphabet="abcdefgh"):
        return "".join(alphabet[i] for i in self.order)

    def __lt__(self, other):
        return self.order < other.order


def transition(a: Arrangement, b: Arrangement) -> Permutation:
    """The substitution carrying arrangement a to arrangement b."""
    pos_b = {v: i for i, v in enumerate(b.order)}
    # s(j) = position in b of the entry a has at position j; then s . a == b
    return Permutation(tuple(pos_b[a.order[j]] for j in range(a.n)))


@dataclass(frozen=True)
class ArrangementGroup:
    """A set of arrangements closed under its own transition substitutions."""

    rows: tuple
    rep: Permutation | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(sorted(self.rows))
        object.__setattr__(self, "rows", rows)
        witness = self._closure_witness()
        if witness is not None:
            a, b, c = witness
            raise ValueError(
                "not closed: the substitution taking "
                f"{a.order} to {b.order} moves {c.order} outside the set"
            )

    def _closure_witness(self):
        row_set = set(self.rows)
        for a in self.rows:
            for b in self.rows:
                s = transition(a, b)
                for c in self.rows:
                    if c.act(s) not in row_set:
                        return (a, b, c)
        return None

    def __len__(self):
        return len(self.rows)


def substitution_group(ag: ArrangementGroup) -> PermGroup:
    """All transition substitutions between pairs of rows."""
    return PermGroup({transition(a, b) for a in ag.rows for b in ag.rows})


def arrangement_array(g: PermGroup, h: PermGroup, base: Arrangement):
    """The |g| arrangements {p . base} split into [g:h] coset blocks.

    Each block is {(rep * t) . base : t in h} for the lexicographically
    smallest representative rep of a left coset of h; blocks are sorted
    by representative, rows within a block lexicographically.
    """
    if not h.is_subgroup_of(g):
        raise ValueError("second group is not a subgroup of the first")
    if base.n != g.n:
        raise ValueError("arrangement degree mismatch")
    remaining = set(g.elements)
    blocks = []
    while remaining:
        rep = min(remaining)
        coset = [rep * t for t in h]
        for p in coset:
            remaining.remove(p)
        rows = tuple(base.act(p) for p in coset)
        blocks.append(ArrangementGroup(rows, rep=rep))
    blocks.sort(key=lambda blk: blk.rep.images)
    return blocks
