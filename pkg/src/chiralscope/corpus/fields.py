"""Small finite fields GF(p^k), enough to build PSL_2(q) for q <= 169.

Elements are encoded as integers 0..q-1 whose base-p digits are the
coefficients of a polynomial in the generator (constant term lowest).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from sympy import factorint

from ..errors import ArgumentError, IntegrityError

MAX_Q = 169


def prime_power(q):
    """Return (p, k) with q = p^k, or None."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, k), = f.items()
    return p, k


# -- polynomials over GF(p), coefficient lists lowest degree first -----------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a, f, p):
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _polymulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _polymod(out, f, p)


def _polypowmod(a, e, f, p):
    result = [1]
    base = _polymod(a, f, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, f, p)
        base = _polymulmod(base, base, f, p)
        e >>= 1
    return result


def _polygcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polymod(a, b, p)
    return a


def _sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f, p):
    """Rabin's test for a monic f (lowest degree first) over GF(p)."""
    k = len(f) - 1
    if k < 1:
        return False
    x = [0, 1]
    if _sub(_polypowmod(x, p**k, f, p), x, p):
        return False
    for r in factorint(k):
        h = _sub(_polypowmod(x, p ** (k // r), f, p), x, p)
        g = _polygcd(f, h, p)
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def _poly_table():
    text = resources.files("chiralscope.data").joinpath("irreducible_polys.txt").read_text()
    table = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        q, p, k, *coeffs = map(int, line.split())
        f = list(reversed(coeffs))
        if p**k != q or len(f) != k + 1 or f[-1] != 1:
            raise IntegrityError(f"malformed irreducible_polys entry: {raw!r}")
        if not is_irreducible(f, p):
            raise IntegrityError(f"stored polynomial for GF({q}) is reducible")
        table[q] = (p, k, tuple(f))
    return table


# -- the field ------------------------------------------------------------------

class GF:
    """GF(q) with add/mul/neg/inv tables over integer codes."""

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ArgumentError(f"{q} is not a prime power")
        if q > MAX_Q:
            raise ArgumentError(f"GF({q}) not supported (q <= {MAX_Q})")
        p, k = pk
        self.q, self.p, self.k = q, p, k
        if k == 1:
            self.modulus = (0, 1)
        else:
            self.modulus = _poly_table()[q][2]
        digits = [self._digits(a) for a in range(q)]
        self._add = [[self._code([(x + y) % p for x, y in zip(da, db)]) for db in digits]
                     for da in digits]
        self._mul = [[self._code(self._mulpoly(da, db)) for db in digits] for da in digits]
        self.neg = [self._code([(-x) % p for x in da]) for da in digits]
        self.inv = [None] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self.inv[a] = b
                    break
            else:
                raise IntegrityError(f"no inverse for {a} in GF({q})")

    def _digits(self, a):
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _code(self, digits):
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _mulpoly(self, a, b):
        if self.k == 1:
            return [a[0] * b[0] % self.p]
        prod = _polymulmod(_trim(list(a)), _trim(list(b)), list(self.modulus), self.p)
        return prod + [0] * (self.k - len(prod))

    def add(self, a, b):
        return self._add[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def element(self, code) -> "FieldElement":
        return FieldElement(self, code)

    def basis(self):
        """Codes of 1, g, g^2, ..., g^(k-1) over the prime field."""
        return [self.p**i for i in range(self.k)]

    def __iter__(self):
        return (FieldElement(self, a) for a in range(self.q))

    def __repr__(self):
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    field: GF
    code: int

    @property
    def coefficients(self):
        return tuple(self.field._digits(self.code))

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg[self.code])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def inverse(self):
        inv = self.field.inv[self.code]
        if inv is None:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(self.field, inv)

    def __bool__(self):
        return self.code != 0


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
