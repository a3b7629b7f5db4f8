"""Built-in groups and the explicit generator data used by the tests.

Alternating groups in their natural action, PSL_2(q) on the projective line,
the five Mathieu groups, the alternating-group chiral pairs for n >= 8 and
the published M23 / M24 pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import factorial, gcd

from ..chirality import GenPair
from ..errors import ArgumentError, IntegrityError
from ..group import PermGroup
from ..perm import Permutation
from .fields import MAX_Q, GF, FieldElement, field, prime_power
from .files import (
    format_group_text,
    format_pair_text,
    parse_group_text,
    parse_pair_text,
    split_blocks,
)

__all__ = [
    "NamedGroup", "alternating", "psl2", "mathieu", "known_pair_alternating",
    "known_pair_m23", "known_pair_m24", "parse_group_file", "parse_pair_file",
    "format_group_file", "format_pair_file", "lookup", "builtin_names",
    "GF", "FieldElement", "field",
]


@dataclass
class NamedGroup:
    name: str
    degree: int
    generators: list
    known_order: int | None = None
    out_order: int | None = None

    def group(self) -> PermGroup:
        """Build the group; a known order must match the chain order exactly."""
        G = PermGroup(self.degree, self.generators)
        if self.known_order is not None and G.order != self.known_order:
            raise IntegrityError(
                f"{self.name}: chain order {G.order} differs from known order "
                f"{self.known_order}")
        return G


def alternating(n: int) -> NamedGroup:
    if n < 3:
        raise ArgumentError("alternating groups need n >= 3")
    three = Permutation.from_cycles([(1, 2, 3)], n)
    if n % 2:
        long = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    else:
        long = Permutation.from_cycles([tuple(range(2, n + 1))], n)
    return NamedGroup(f"A{n}", n, [three, long], factorial(n) // 2, 4 if n == 6 else 2)


def psl2(q: int) -> NamedGroup:
    """PSL_2(q) acting on the q+1 points of the projective line.

    Point i+1 is the field element with code i, point q+1 is infinity.
    Generators: z -> z + b for each basis element b over the prime field, and
    z -> -1/z. Upper and lower unitriangular matrices generate SL_2(q), and
    conjugating the translations by the inversion gives the lower ones.
    """
    pk = prime_power(q)
    if pk is None or q < 4 or q > MAX_Q:
        raise ArgumentError(f"psl2 needs a prime power 4 <= q <= {MAX_Q}, got {q}")
    p, k = pk
    F = field(q)
    inf = q
    gens = []
    for b in F.basis():
        gens.append(Permutation([F.add(z, b) + 1 for z in range(q)] + [inf + 1]))
    images = []
    for z in range(q):
        images.append(inf + 1 if z == 0 else F.neg[F.inv[z]] + 1)
    images.append(0 + 1)
    gens.append(Permutation(images))
    order = q * (q * q - 1) // gcd(2, q - 1)
    return NamedGroup(f"psl2:{q}", q + 1, gens, order, gcd(2, q - 1) * k)


@lru_cache(maxsize=None)
def _blocks(filename):
    text = resources.files("chiralscope.data").joinpath(filename).read_text()
    return {name: (meta, body) for name, meta, body in split_blocks(text)}


MATHIEU = ("M11", "M12", "M22", "M23", "M24")


def mathieu(name: str) -> NamedGroup:
    name = name.upper()
    if name not in MATHIEU:
        raise ArgumentError(f"unknown Mathieu group {name!r}; choose from {MATHIEU}")
    meta, body = _blocks("mathieu_generators.txt")[name]
    degree, gens = parse_group_text(body)
    return NamedGroup(name, degree, gens, int(meta["order"]), int(meta["out"]))


def known_pair_alternating(n: int) -> GenPair:
    """x = (2,...,n), t = (1,2)(3,4) for even n; x = (1,...,n), t = (1,2)(3,6) for odd n."""
    if n < 8:
        raise ArgumentError("the explicit alternating pairs need n >= 8")
    if n % 2 == 0:
        x = Permutation.from_cycles([tuple(range(2, n + 1))], n)
        t = Permutation.from_cycles([(1, 2), (3, 4)], n)
    else:
        x = Permutation.from_cycles([tuple(range(1, n + 1))], n)
        t = Permutation.from_cycles([(1, 2), (3, 6)], n)
    return GenPair(x, t)


def _known_pair(name):
    meta, body = _blocks("chiral_pairs.txt")[name]
    degree, _, x, t = parse_pair_text(body)
    return GenPair(x, t)


def known_pair_m23() -> GenPair:
    return _known_pair("M23")


def known_pair_m24() -> GenPair:
    return _known_pair("M24")


def known_pair_metadata(name: str) -> dict:
    meta, _ = _blocks("chiral_pairs.txt")[name]
    p, q = map(int, meta["type"].split(","))
    return {"order": int(meta["order"]), "out": int(meta["out"]), "type": (p, q)}


# -- files ------------------------------------------------------------------------

def parse_group_file(text: str, name: str = "file") -> NamedGroup:
    degree, gens = parse_group_text(text)
    return NamedGroup(name, degree, gens)


def parse_pair_file(text: str, name: str = "file"):
    """Return (NamedGroup, GenPair); with no listed generators G = <x, t>."""
    degree, gens, x, t = parse_pair_text(text)
    if not gens:
        gens = [x, t]
    return NamedGroup(name, degree, gens), GenPair(x, t)


def format_group_file(g: NamedGroup) -> str:
    header = g.name
    if g.known_order is not None:
        header += f" (order {g.known_order})"
    return format_group_text(g.degree, g.generators, header)


def format_pair_file(g: NamedGroup, pair: GenPair) -> str:
    return format_pair_text(g.degree, g.generators, pair.x, pair.t, g.name)


# -- name lookup ------------------------------------------------------------------

def lookup(name: str) -> NamedGroup:
    """Resolve ``A7``, ``psl2:11``, ``M22`` and similar built-in names."""
    key = name.strip()
    m = re.fullmatch(r"[Aa](\d+)", key)
    if m:
        return alternating(int(m.group(1)))
    m = re.fullmatch(r"(?i)psl2[:(](\d+)\)?", key)
    if m:
        return psl2(int(m.group(1)))
    if key.upper() in MATHIEU:
        return mathieu(key)
    raise ArgumentError(f"unknown built-in group {name!r}")


def builtin_names() -> list:
    names = [f"A{n}" for n in range(5, 14)]
    names += [f"psl2:{q}" for q in range(4, MAX_Q + 1) if prime_power(q)]
    names += list(MATHIEU)
    return names
