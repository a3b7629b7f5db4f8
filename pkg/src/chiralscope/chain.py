"""Stabilizer chains (base and strong generating set) for permutation groups.

Construction runs in two phases:

1. A random phase: product-replacement elements are sifted and nontrivial
   residues become strong generators. The product of the basic orbit lengths
   is at every moment a *lower bound* for the group order, because all strong
   generators are genuine group elements. If a known upper bound is reached
   the chain is already complete, and if a caller only wants to know whether
   the order exceeds some value, the phase can stop as soon as it does.
2. A deterministic verification phase: all Schreier generators of every
   level are sifted from the bottom level up. A chain that survives this is
   complete, so every reported order is a proof and not a probabilistic
   estimate.

The random phase is seeded, so output is reproducible for fixed input.
"""

from __future__ import annotations

import random
from math import prod

from .perm import (
    raw_apply,
    raw_identity,
    raw_inv_table,
    raw_is_identity,
    raw_mul,
    raw_table,
)

DEFAULT_SEED = 0x5EED
_PATIENCE = 12


class _Level:
    __slots__ = ("base", "gens", "tables", "orbit", "trans", "tinv")

    def __init__(self, base, n):
        self.base = base
        self.gens = []
        self.tables = []
        self.orbit = [base]
        self.trans = [None] * n
        self.tinv = [None] * n
        ident = raw_identity(n)
        self.trans[base] = ident
        self.tinv[base] = raw_table(ident)

    def add_generator(self, g):
        """Add ``g`` and extend the orbit/transversal incrementally."""
        tbl = raw_table(g)
        self.gens.append(g)
        self.tables.append(tbl)
        trans = self.trans
        tinv = self.tinv
        orbit = self.orbit
        fresh = []
        for p in orbit:
            q = g[p]
            if trans[q] is None:
                u = raw_apply(trans[p], tbl)
                trans[q] = u
                tinv[q] = raw_inv_table(u)
                fresh.append(q)
        orbit.extend(fresh)
        tables = self.tables
        k = 0
        while k < len(fresh):
            p = fresh[k]
            k += 1
            up = trans[p]
            for h, htbl in zip(self.gens, tables):
                q = h[p]
                if trans[q] is None:
                    u = raw_apply(up, htbl)
                    trans[q] = u
                    tinv[q] = raw_inv_table(u)
                    orbit.append(q)
                    fresh.append(q)


class StabChain:
    """Base, strong generators and transversals of a permutation group.

    ``gens`` are raw image tables (see :mod:`chiralscope.perm`).
    """

    def __init__(self, degree, gens, *, base_hint=(), seed=DEFAULT_SEED,
                 known_upper=None, stop_above=None, verify=True):
        self.degree = degree
        self.levels = []
        self._base_hint = list(base_hint)
        self.complete = False
        gens = [g for g in gens if not raw_is_identity(g)]
        self.gens = gens
        if not gens:
            self.complete = True
            return
        self._new_level(0, gens[0])
        for g in gens:
            self.levels[0].add_generator(g)
        target = known_upper
        self._random_phase(random.Random(seed), target, stop_above)
        if target is not None and self.order_lower_bound() == target:
            self.complete = True
            return
        if stop_above is not None and self.order_lower_bound() > stop_above:
            return
        if verify:
            self._verify()
            self.complete = True

    # -- construction helpers ---------------------------------------------

    def _pick_base_point(self, g):
        used = {lv.base for lv in self.levels}
        for b in self._base_hint:
            if g[b] != b and b not in used:
                return b
        for i in range(self.degree):
            if g[i] != i:
                return i
        raise AssertionError("identity has no moved point")

    def _new_level(self, depth, g):
        assert depth == len(self.levels)
        self.levels.append(_Level(self._pick_base_point(g), self.degree))

    def _install(self, residue, first, last):
        """Add ``residue`` as a strong generator for levels first..last."""
        if last == len(self.levels):
            self._new_level(last, residue)
        for k in range(first, last + 1):
            self.levels[k].add_generator(residue)

    def sift(self, g, start=0):
        """Strip ``g`` through levels ``start..``; return (residue, level)."""
        levels = self.levels
        for k in range(start, len(levels)):
            lv = levels[k]
            t = lv.tinv[g[lv.base]]
            if t is None:
                return g, k
            g = raw_apply(g, t)
        return g, len(levels)

    def _random_phase(self, rng, target, stop_above):
        gens = self.gens
        n = self.degree
        state = list(gens)
        while len(state) < 10:
            state.append(gens[len(state) % len(gens)])
        acc = raw_identity(n)
        r = len(state)

        def step():
            nonlocal acc
            i = rng.randrange(r)
            j = rng.randrange(r - 1)
            if j >= i:
                j += 1
            if rng.random() < 0.5:
                state[i] = raw_mul(state[i], state[j])
            else:
                state[i] = raw_apply(state[i], raw_inv_table(state[j]))
            acc = raw_mul(acc, state[i])
            return acc

        for _ in range(30):
            step()
        quiet = 0
        while quiet < _PATIENCE:
            lb = self.order_lower_bound()
            if target is not None and lb >= target:
                return
            if stop_above is not None and lb > stop_above:
                return
            residue, k = self.sift(step())
            if raw_is_identity(residue):
                quiet += 1
                continue
            quiet = 0
            # level 0 already holds every input generator
            self._install(residue, min(1, k), k)

    def _verify(self):
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            restart = None
            for p in list(lv.orbit):
                up = lv.trans[p]
                for g, gtbl in zip(list(lv.gens), list(lv.tables)):
                    q = g[p]
                    h = raw_apply(raw_apply(up, gtbl), lv.tinv[q])
                    if raw_is_identity(h):
                        continue
                    residue, k = self.sift(h, i + 1)
                    if raw_is_identity(residue):
                        continue
                    self._install(residue, i + 1, k)
                    restart = k
                    break
                if restart is not None:
                    break
            if restart is None:
                i -= 1
            else:
                i = restart

    # -- queries ------------------------------------------------------------

    def order_lower_bound(self):
        return prod(len(lv.orbit) for lv in self.levels)

    @property
    def order(self):
        if not self.complete:
            raise RuntimeError("chain was stopped early; order is only bounded")
        return self.order_lower_bound()

    @property
    def base(self):
        return [lv.base for lv in self.levels]

    def contains(self, g):
        residue, _ = self.sift(g)
        return raw_is_identity(residue)

    def strong_generators(self):
        seen = []
        for lv in self.levels:
            for g in lv.gens:
                if g not in seen:
                    seen.append(g)
        return seen

    def elements(self):
        """All elements, as products of transversal representatives."""
        n = self.degree
        levels = self.levels
        if not levels:
            yield raw_identity(n)
            return

        def walk(k, acc):
            if k < 0:
                yield acc
                return
            lv = levels[k]
            for p in lv.orbit:
                yield from walk(k - 1, raw_mul(acc, lv.trans[p]))

        yield from walk(len(levels) - 1, raw_identity(n))

    def random_element(self, rng):
        n = self.degree
        g = raw_identity(n)
        for lv in reversed(self.levels):
            g = raw_mul(g, lv.trans[lv.orbit[rng.randrange(len(lv.orbit))]])
        return g
