"""Permutation groups: construction, membership, classes and friends."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .chain import DEFAULT_SEED, StabChain
from .errors import ArgumentError, DegreeMismatchError, check_capacity
from .perm import (
    Permutation,
    raw_identity,
    raw_inv,
    raw_is_identity,
    raw_mul,
    raw_order,
)


class PermGroup:
    """A permutation group given by generators, with a verified stabilizer chain.

    Instances are immutable; derived data (classes, element lists) is cached.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation] = (), *,
                 base: Sequence[int] = (), seed: int = DEFAULT_SEED,
                 known_order: int | None = None):
        if degree < 1:
            raise ArgumentError("empty domain: degree must be at least 1")
        gens = list(generators)
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(gens)
        self._chain = StabChain(degree, [g._img for g in gens],
                                base_hint=[b - 1 for b in base], seed=seed,
                                known_upper=known_order)
        self.order = self._chain.order

    @classmethod
    def _from_chain(cls, degree, generators, chain):
        G = cls.__new__(cls)
        G.degree = degree
        G.generators = tuple(generators)
        G._chain = chain
        G.order = chain.order
        return G

    def __repr__(self):
        return f"<PermGroup degree={self.degree} order={self.order}>"

    def __len__(self):
        return self.order

    @property
    def base(self) -> list:
        return [b + 1 for b in self._chain.base]

    @property
    def strong_generators(self) -> list:
        return [Permutation._from_raw(g) for g in self._chain.strong_generators()]

    def basic_orbit_lengths(self) -> list:
        return [len(lv.orbit) for lv in self._chain.levels]

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(f"degree {p.degree} vs group degree {self.degree}")
        return self._chain.contains(p._img)

    __contains__ = contains

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def orbit(self, point: int) -> list:
        seen = {point - 1}
        queue = [point - 1]
        for p in queue:
            for g in self.generators:
                q = g._img[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(p + 1 for p in seen)

    def orbits(self) -> list:
        left = set(range(1, self.degree + 1))
        out = []
        while left:
            orb = self.orbit(min(left))
            out.append(orb)
            left.difference_update(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    # -- enumeration ----------------------------------------------------------

    def raw_elements(self) -> Iterator:
        check_capacity(self.order)
        return self._chain.elements()

    def elements(self) -> Iterator[Permutation]:
        """Every element, in a fixed order. Refused beyond the enumeration limit."""
        for g in self.raw_elements():
            yield Permutation._from_raw(g)

    def random_element(self, seed: int | random.Random) -> Permutation:
        return random_element(self, seed)

    @cached_property
    def conjugacy_classes(self) -> "ConjClassTable":
        return _conjugacy_classes(self)

    @cached_property
    def involutions(self) -> list:
        return _involutions(self)


def group_from_generators(degree: int, gens: Sequence[Permutation], **kw) -> PermGroup:
    return PermGroup(degree, gens, **kw)


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def subgroup(G: PermGroup, gens: Sequence[Permutation]) -> PermGroup:
    """Subgroup of ``G`` generated by ``gens``; the order of ``G`` caps the search."""
    for g in gens:
        if g.degree != G.degree:
            raise DegreeMismatchError("generator degree differs from group degree")
    return PermGroup(G.degree, gens)


def random_element(G: PermGroup, seed) -> Permutation:
    """Uniformly random element: one random coset representative per chain level.

    Exact uniformity follows from the unique factorization of group elements
    along the stabilizer chain. ``seed`` may be an int or a ``random.Random``.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Permutation._from_raw(G._chain.random_element(rng))


def _conj_raw(x, g, ginv):
    return raw_mul(raw_mul(ginv, x), g)


# -- conjugacy classes ---------------------------------------------------------

@dataclass
class ConjugacyClass:
    representative: Permutation
    size: int
    element_order: int
    members: frozenset = field(repr=False)

    def __contains__(self, p: Permutation) -> bool:
        return p._img in self.members


@dataclass
class ConjClassTable:
    group_order: int
    classes: list

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def class_of(self, p: Permutation) -> ConjugacyClass:
        for c in self.classes:
            if p in c:
                return c
        raise ArgumentError(f"{p} is not in the group")

    def sizes(self) -> list:
        return [c.size for c in self.classes]


def conjugation_orbit(G: PermGroup, x: Permutation) -> set:
    """The G-class of ``x`` as a set of raw image tables."""
    gens = [(g._img, raw_inv(g._img)) for g in G.generators]
    seen = {x._img}
    queue = [x._img]
    for y in queue:
        for g, ginv in gens:
            z = _conj_raw(y, g, ginv)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


def _conjugacy_classes(G: PermGroup) -> ConjClassTable:
    check_capacity(G.order, "conjugacy class computation")
    classes = []
    covered = set()
    total = 0
    for g in G.raw_elements():
        if total == G.order:
            break
        if g in covered:
            continue
        orbit = conjugation_orbit(G, Permutation._from_raw(g))
        covered |= orbit
        total += len(orbit)
        classes.append(ConjugacyClass(Permutation._from_raw(g), len(orbit),
                                      raw_order(g), frozenset(orbit)))
    classes.sort(key=lambda c: (c.element_order, c.size, tuple(c.representative._img)))
    return ConjClassTable(G.order, classes)


def conjugacy_classes(G: PermGroup) -> ConjClassTable:
    return G.conjugacy_classes


def _involutions(G: PermGroup) -> list:
    out = []
    for c in G.conjugacy_classes:
        if c.element_order == 2:
            out.extend(Permutation._from_raw(g) for g in c.members)
    out.sort()
    return out


def involutions(G: PermGroup) -> list:
    """All elements of order 2, sorted by image table."""
    return G.involutions


# -- centralizers, normalizers (brute force at desk scale) ----------------------

def _subgroup_from_elements(G: PermGroup, raws: Iterable) -> PermGroup:
    gens = []
    H = PermGroup(G.degree, [])
    for g in raws:
        if raw_is_identity(g) or H._chain.contains(g):
            continue
        gens.append(Permutation._from_raw(g))
        H = PermGroup(G.degree, gens)
    return H


def centralizer(G: PermGroup, x: Permutation) -> PermGroup:
    xr = x._img
    return _subgroup_from_elements(
        G, (g for g in G.raw_elements() if raw_mul(xr, g) == raw_mul(g, xr)))


def normalizer(G: PermGroup, A: PermGroup) -> PermGroup:
    agens = [a._img for a in A.generators]

    def normalizes(g):
        ginv = raw_inv(g)
        return all(A._chain.contains(_conj_raw(a, g, ginv)) for a in agens)

    return _subgroup_from_elements(G, (g for g in G.raw_elements() if normalizes(g)))


def inverting_coset_check(G: PermGroup, x: Permutation, t: Permutation) -> bool:
    """Executable witness that every inverter of ``x`` lies in C_G(x)·t.

    Requires ``x ** t == x ** -1``. Brute force over the elements of G.
    """
    xinv = x.inverse()
    if x.conjugate(t) != xinv:
        raise ArgumentError("t does not invert x")
    inverters = inverting_set(G, x)
    coset = {raw_mul(c, t._img) for c in (g for g in G.raw_elements()
                                          if raw_mul(x._img, g) == raw_mul(g, x._img))}
    return inverters <= coset


def inverting_set(G: PermGroup, x: Permutation) -> set:
    """Raw tables of all y in G with x ** y == x ** -1."""
    xr = x._img
    xinv = raw_inv(xr)
    # x^y = x^-1  <=>  x*y = y*x^-1
    return {g for g in G.raw_elements() if raw_mul(xr, g) == raw_mul(g, xinv)}


def conjugate_overgroup_count(G: PermGroup, A: PermGroup, M: PermGroup) -> int:
    """|N_G(A) : N_M(A)|, the number of G-conjugates of M that contain A.

    The caller asserts maximality of M and the conjugacy hypothesis on A;
    only containment A <= M <= G is checked here.
    """
    if not A.is_subgroup_of(M):
        raise ArgumentError("A is not contained in M")
    if not M.is_subgroup_of(G):
        raise ArgumentError("M is not contained in G")
    return normalizer(G, A).order // normalizer(M, A).order


def diagonal_pair_group(pairs: Sequence[tuple]) -> PermGroup:
    """Subgroup of G1 x G2 generated by the glued pairs, acting on n1 + n2 points."""
    if not pairs:
        raise ArgumentError("need at least one pair")
    n1 = pairs[0][0].degree
    n2 = pairs[0][1].degree
    glued = []
    for a, b in pairs:
        if a.degree != n1 or b.degree != n2:
            raise DegreeMismatchError("pair components must share degrees column-wise")
        glued.append(Permutation._from_raw(glue_raw(a._img, b._img)))
    return PermGroup(n1 + n2, glued, base=range(1, n1 + 1))


def glue_raw(a, b):
    n1 = len(a)
    imgs = list(a) + [n1 + j for j in b]
    n = n1 + len(b)
    if n <= 256:
        return bytes(imgs)
    return tuple(imgs)

