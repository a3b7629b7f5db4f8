"""Chiral generating pairs (x, t): verdicts, censuses and random search.

A pair (x, t) of a finite group G gives a chiral polyhedron with rotation
group G when

* x and t generate G,
* t is an involution, and
* no automorphism of G inverts x while fixing t.

The last condition is decided with the *D-test*: the automorphism exists iff
the subgroup D of H x H generated by (x, x^-1) and (t, t) is the graph of a
map, i.e. iff |D| = |H| for H = <x, t>. This sees outer automorphisms as well
as inner ones, without ever building Aut(H).

The automorphism is often required to be an *involution*. No separate
test is needed: if a fixes t and inverts x then a^2 fixes both generators,
hence a^2 = 1. (When x is itself an involution, a may be the identity, which
is why such pairs are excluded from chirality.)
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .chain import StabChain
from .errors import ArgumentError, DegreeMismatchError, IntegrityError, check_capacity
from .group import PermGroup, glue_raw
from .perm import Permutation, raw_inv, raw_is_identity, raw_mul, raw_order, raw_pow


@dataclass(frozen=True)
class GenPair:
    x: Permutation
    t: Permutation

    def __post_init__(self):
        if self.x.degree != self.t.degree:
            raise DegreeMismatchError("x and t must have the same degree")

    @property
    def degree(self) -> int:
        return self.x.degree

    @property
    def y(self) -> Permutation:
        """x^-1 t, so that t = x y."""
        return self.x.inverse() * self.t

    @classmethod
    def from_rotations(cls, x: Permutation, y: Permutation) -> "GenPair":
        return cls(x, x * y)


@dataclass(frozen=True)
class PairVerdict:
    generates: bool
    t_is_involution: bool
    x_order: int
    reflexible: bool
    chiral: bool
    schlafli_type: tuple
    intersection_ok: bool
    subgroup_order: int

    def as_dict(self) -> dict:
        return {
            "generates": self.generates,
            "t_is_involution": self.t_is_involution,
            "x_order": self.x_order,
            "reflexible": self.reflexible,
            "chiral": self.chiral,
            "schlafli_type": list(self.schlafli_type),
            "intersection_ok": self.intersection_ok,
            "subgroup_order": self.subgroup_order,
        }


@dataclass
class ChiralCensus:
    group_name: str
    group_order: int
    out_order: int
    total_chiral_pairs: int
    polyhedra_count: int
    by_type: dict = field(default_factory=dict)
    # enantiomorphic forms merged: polyhedra_count / 2
    mirror_classes: int = 0
    # chiral pairs whose rotation subgroups <x>, <y> meet nontrivially
    pairs_failing_intersection: int = 0

    def as_dict(self) -> dict:
        return {
            "group_name": self.group_name,
            "group_order": self.group_order,
            "out_order": self.out_order,
            "total_chiral_pairs": self.total_chiral_pairs,
            "polyhedra_count": self.polyhedra_count,
            "by_type": {f"{p},{q}": n for (p, q), n in sorted(self.by_type.items())},
            "mirror_classes": self.mirror_classes,
            "pairs_failing_intersection": self.pairs_failing_intersection,
        }


def enantiomorph(pair: GenPair) -> GenPair:
    """The mirror pair (x^-1, t)."""
    return GenPair(pair.x.inverse(), pair.t)


# -- the D-test ----------------------------------------------------------------

def _graph_order_exceeds(n, x1, t1, x2, t2, h_order) -> bool:
    """True iff <(x1,x2),(t1,t2)> is larger than ``h_order``."""
    gens = [glue_raw(x1, x2), glue_raw(t1, t2)]
    chain = StabChain(2 * n, gens, base_hint=range(n), stop_above=h_order)
    if not chain.complete:
        return True
    return chain.order > h_order


def tuple_equivalent(x1: Permutation, t1: Permutation,
                     x2: Permutation, t2: Permutation) -> bool:
    """Is there an automorphism of H = <x1, t1> sending x1 -> x2 and t1 -> t2?"""
    n = x1.degree
    if any(p.degree != n for p in (t1, x2, t2)):
        raise DegreeMismatchError("all four permutations must share a degree")
    H = PermGroup(n, [x1, t1])
    if not (H.contains(x2) and H.contains(t2)):
        return False
    if PermGroup(n, [x2, t2], known_order=H.order).order != H.order:
        return False
    return not _graph_order_exceeds(n, x1._img, t1._img, x2._img, t2._img, H.order)


def _intersection_trivial(x, y) -> bool:
    powers = set()
    g = x
    while not raw_is_identity(g):
        powers.add(g)
        g = raw_mul(g, x)
    g = y
    while not raw_is_identity(g):
        if g in powers:
            return False
        g = raw_mul(g, y)
    return True


def _verdict_raw(G_order, n, x, t, *, full=True):
    """Classify raw tables x, t inside a group of order ``G_order``."""
    xinv = raw_inv(x)
    y = raw_mul(xinv, t)
    x_order = raw_order(x)
    t_inv = raw_order(t) == 2
    h = StabChain(n, [x, t], known_upper=G_order)
    h_order = h.order
    generates = h_order == G_order
    if full or (generates and t_inv and x_order >= 3):
        reflexible = not _graph_order_exceeds(n, x, t, xinv, t, h_order)
    else:
        reflexible = True
    chiral = generates and t_inv and x_order >= 3 and not reflexible
    return PairVerdict(
        generates=generates,
        t_is_involution=t_inv,
        x_order=x_order,
        reflexible=reflexible,
        chiral=chiral,
        schlafli_type=(x_order, raw_order(y)),
        intersection_ok=_intersection_trivial(x, y),
        subgroup_order=h_order,
    )


def classify_pair(G: PermGroup, pair: GenPair) -> PairVerdict:
    if pair.degree != G.degree:
        raise DegreeMismatchError("pair degree differs from group degree")
    if not G.contains(pair.x) or not G.contains(pair.t):
        raise ArgumentError("x and t must lie in G")
    return _verdict_raw(G.order, G.degree, pair.x._img, pair.t._img)


def is_chiral(G: PermGroup, pair: GenPair) -> bool:
    return classify_pair(G, pair).chiral


# -- census ----------------------------------------------------------------------

def _count_for_rep(G_order, n, x, involutions):
    """Chiral pairs (x, t) for one class representative x.

    <x> acts on the involutions by conjugation and preserves every verdict,
    so one representative per <x>-orbit is classified and weighted.
    """
    xinv = raw_inv(x)
    by_type = Counter()
    bad_intersection = 0
    todo = set(involutions)
    for t in involutions:
        if t not in todo:
            continue
        orbit = {t}
        s = t
        while True:
            s = raw_mul(raw_mul(xinv, s), x)
            if s == t:
                break
            orbit.add(s)
        todo -= orbit
        v = _verdict_raw(G_order, n, x, t, full=False)
        if v.chiral:
            by_type[v.schlafli_type] += len(orbit)
            if not v.intersection_ok:
                bad_intersection += len(orbit)
    return by_type, bad_intersection


def _census_worker(args):
    G_order, n, x, invs = args
    return _count_for_rep(G_order, n, x, invs)


def count_chiral_pairs(G: PermGroup, out_order: int, *, name: str = "",
                       jobs: int = 1) -> ChiralCensus:
    """Count chiral pairs in G and the polyhedra they define.

    Every verdict is invariant under simultaneous conjugation, so each class
    representative x of order >= 3 is paired with all involutions and the
    result weighted by the class size. Aut(G) acts freely on generating pairs
    (an automorphism fixing both generators is trivial), so every orbit has
    |G| |Out(G)| pairs. Each orbit is one chiral polyhedron with a chosen
    orientation; a pair and its enantiomorph lie in distinct orbits, and
    ``mirror_classes`` merges the two forms.
    """
    check_capacity(G.order, "chiral pair census")
    table = G.conjugacy_classes
    invs = sorted(g._img for g in G.involutions)
    reps = [c for c in table if c.element_order >= 3]
    tasks = [(G.order, G.degree, c.representative._img, invs) for c in reps]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_census_worker, tasks))
    else:
        results = [_census_worker(task) for task in tasks]

    pairs_by_type = Counter()
    bad = 0
    for c, (by_type, bad_int) in zip(reps, results):
        for typ, k in by_type.items():
            pairs_by_type[typ] += k * c.size
        bad += bad_int * c.size
    total = sum(pairs_by_type.values())
    aut = G.order * out_order
    by_poly = {}
    for typ, k in sorted(pairs_by_type.items()):
        if k % aut:
            raise IntegrityError(
                f"{k} chiral pairs of type {typ} not divisible by |Aut(G)| = {aut}; "
                "wrong out_order?")
        by_poly[typ] = k // aut
    count = total // aut
    if count % 2:
        raise IntegrityError(f"{count} chiral pair orbits: enantiomorphs must pair up")
    return ChiralCensus(name, G.order, out_order, total, count, by_poly,
                        count // 2, bad)


# -- random search --------------------------------------------------------------

def random_involution(G: PermGroup, rng: random.Random, tries: int = 200):
    """Power up a random element of even order; None if none turned up."""
    for _ in range(tries):
        g = G._chain.random_element(rng)
        k = raw_order(g)
        if k % 2 == 0:
            return raw_pow(g, k // 2)
    return None


def random_chiral_search(G: PermGroup, trials: int, seed: int, *,
                         candidates=()) -> GenPair | None:
    """Try random (x, t) with t an involution; return the first chiral pair.

    ``candidates`` are tried first and count against ``trials``.
    """
    if trials < 1:
        raise ArgumentError("trials must be at least 1")
    rng = random.Random(seed)
    n = G.degree
    done = 0
    for pair in candidates:
        if done >= trials:
            return None
        done += 1
        if (G.contains(pair.x) and G.contains(pair.t)
                and _verdict_raw(G.order, n, pair.x._img, pair.t._img, full=False).chiral):
            return pair
    while done < trials:
        done += 1
        x = G._chain.random_element(rng)
        if raw_order(x) < 3:
            continue
        t = random_involution(G, rng)
        if t is None:
            return None
        if _verdict_raw(G.order, n, x, t, full=False).chiral:
            return GenPair(Permutation._from_raw(x), Permutation._from_raw(t))
    return None
