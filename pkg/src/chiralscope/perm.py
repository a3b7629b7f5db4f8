"""Permutations of {1..n} and the cycle-notation text format.

Internally an image table is stored 0-based. For degree <= 256 it is a
``bytes`` object so that composition is a single ``bytes.translate`` call;
larger degrees fall back to tuples. Composition is left to right:
``(p * q)(i) == q(p(i))``, matching the usual computer-algebra convention
in which ``x ** g == g**-1 * x * g``.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, ParseError

_IDENT = bytes(range(256))
BYTES_MAX_DEGREE = 256


# -- raw image-table helpers (hot paths use these directly) ------------------

def raw_identity(n):
    if n <= BYTES_MAX_DEGREE:
        return _IDENT[:n]
    return tuple(range(n))


def raw_from_list(images0, n):
    if n <= BYTES_MAX_DEGREE:
        return bytes(images0)
    return tuple(images0)


def raw_table(b):
    """Lookup table for right-multiplying by ``b`` via :func:`raw_apply`."""
    if type(b) is bytes:
        return b + _IDENT[len(b):]
    return b


def raw_apply(a, table):
    if type(a) is bytes:
        return a.translate(table)
    return tuple(map(table.__getitem__, a))


def raw_mul(a, b):
    if type(a) is bytes:
        return a.translate(b + _IDENT[len(b):])
    return tuple(map(b.__getitem__, a))


def raw_inv(a):
    n = len(a)
    if type(a) is bytes:
        return bytes.maketrans(a, _IDENT[:n])[:n]
    out = [0] * n
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def raw_inv_table(a):
    if type(a) is bytes:
        return bytes.maketrans(a, _IDENT[:len(a)])
    return raw_inv(a)


def raw_is_identity(a):
    if type(a) is bytes:
        return a == _IDENT[:len(a)]
    return all(i == j for i, j in enumerate(a))


def raw_pow(a, k):
    n = len(a)
    if k < 0:
        a = raw_inv(a)
        k = -k
    result = raw_identity(n)
    base = a
    while k:
        if k & 1:
            result = raw_mul(result, base)
        base = raw_mul(base, base)
        k >>= 1
    return result


def raw_order(a):
    n = len(a)
    seen = bytearray(n)
    order = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = a[j]
            length += 1
        order = order * length // gcd(order, length)
    return order


def raw_cycles(a):
    n = len(a)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if seen[i] or a[i] == i:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = 1
            cyc.append(j + 1)
            j = a[j]
        out.append(tuple(cyc))
    return out


# -- public class -----------------------------------------------------------

class Permutation:
    """A bijection of {1, ..., degree}. Immutable and hashable."""

    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]):
        n = len(images)
        if n == 0:
            raise ValueError("a permutation needs degree >= 1")
        zero = [i - 1 for i in images]
        if sorted(zero) != list(range(n)):
            raise ValueError(f"not a bijection of 1..{n}: {list(images)}")
        self._img = raw_from_list(zero, n)

    @classmethod
    def _from_raw(cls, raw):
        p = cls.__new__(cls)
        p._img = raw
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._from_raw(raw_identity(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 1 <= pt <= degree:
                    raise ValueError(f"point {pt} outside 1..{degree}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]] if cyc else []):
                img[a - 1] = b - 1
        return cls._from_raw(raw_from_list(img, degree))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        return parse_permutation(text, degree)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple:
        """Images of 1..degree, 1-based."""
        return tuple(i + 1 for i in self._img)

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def _check(self, other):
        if len(other._img) != len(self._img):
            raise DegreeMismatchError(
                f"degree {len(self._img)} vs {len(other._img)}")

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        self._check(other)
        return Permutation._from_raw(raw_mul(self._img, other._img))

    def inverse(self) -> "Permutation":
        return Permutation._from_raw(raw_inv(self._img))

    __invert__ = inverse

    def __pow__(self, k: int) -> "Permutation":
        return Permutation._from_raw(raw_pow(self._img, k))

    def conjugate(self, g: "Permutation") -> "Permutation":
        """``self ** g`` in exponent notation, i.e. ``g^-1 * self * g``."""
        self._check(g)
        return Permutation._from_raw(
            raw_mul(raw_mul(raw_inv(g._img), self._img), g._img))

    def commutes_with(self, other: "Permutation") -> bool:
        return raw_mul(self._img, other._img) == raw_mul(other._img, self._img)

    def order(self) -> int:
        return raw_order(self._img)

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its smallest point."""
        return raw_cycles(self._img)

    def is_identity(self) -> bool:
        return raw_is_identity(self._img)

    def support(self) -> list:
        return [i + 1 for i, j in enumerate(self._img) if i != j]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self):
        return hash(self._img)

    def __lt__(self, other):
        return tuple(self._img) < tuple(other._img)

    def __str__(self):
        return format_cycles(self.cycles())

    def __repr__(self):
        return f"Permutation.parse({str(self)!r}, {self.degree})"


def element_order(p: Permutation) -> int:
    """Least common multiple of the cycle lengths of ``p``."""
    return p.order()


def format_cycles(cycles) -> str:
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


# -- cycle-notation parser ---------------------------------------------------

def _position(text, index):
    line = text.count("\n", 0, index) + 1
    col = index - (text.rfind("\n", 0, index) + 1) + 1
    return line, col


def parse_cycles(text: str, degree: int, *, line_offset: int = 0) -> list:
    """Parse ``(1,2,3)(4,5)`` into a list of cycles (tuples of ints).

    Whitespace, including line breaks, may appear anywhere between tokens.
    ``()`` denotes the identity. Points must lie in 1..degree and may not
    repeat. ``line_offset`` shifts reported line numbers so that callers
    parsing a fragment of a larger file get file-relative diagnostics.
    """
    cycles = []
    seen = {}
    i = 0
    n = len(text)

    def fail(msg, at):
        line, col = _position(text, at)
        raise ParseError(msg, line + line_offset, col)

    def skip_ws(k):
        while k < n and text[k].isspace():
            k += 1
        return k

    i = skip_ws(i)
    if i == n:
        fail("empty permutation", i)
    while i < n:
        if text[i] != "(":
            fail(f"expected '(' but found {text[i]!r}", i)
        i = skip_ws(i + 1)
        cyc = []
        if i < n and text[i] == ")":
            i = skip_ws(i + 1)
            continue
        while True:
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if start == i:
                fail("expected a point number", start)
            pt = int(text[start:i])
            if not 1 <= pt <= degree:
                fail(f"point {pt} outside 1..{degree}", start)
            if pt in seen:
                fail(f"point {pt} repeated", start)
            seen[pt] = start
            cyc.append(pt)
            i = skip_ws(i)
            if i >= n:
                fail("unterminated cycle", i)
            if text[i] == ",":
                i = skip_ws(i + 1)
                continue
            if text[i] == ")":
                i = skip_ws(i + 1)
                break
            fail(f"unexpected character {text[i]!r} in cycle", i)
        if len(cyc) > 1:
            cycles.append(tuple(cyc))
    return cycles


def parse_permutation(text: str, degree: int, *, line_offset: int = 0) -> Permutation:
    return Permutation.from_cycles(parse_cycles(text, degree, line_offset=line_offset), degree)
