"""Exact checks of the involution-counting inequalities for groups of Lie type.

For a Lie-type group G with cyclic maximal torus <x> the argument needs

    i_2(G) > |T| * i_2(C_G(t0)) + sum of i_2(M) over maximal overgroups M of <x>

with |T| = d |<x>|. The left side is replaced by a lower bound and the right
side by upper bounds, all read from the row data in :mod:`.tables`, and the
result is decided in exact integer arithmetic. Fractions such as q^N / 2 are
floored, which only weakens the left side.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache
from math import gcd

import sympy
from sympy import Function, Integer, Symbol

from ..errors import ArgumentError, IntegrityError
from . import tables

q, n, m, d = (Symbol(s, integer=True, positive=True) for s in "qnmd")
eps = Symbol("eps", integer=True)

TAG_EXCLUDED = "excluded-list-3"
TAG_LIST_1 = "classical-exception-1"
TAG_LIST_2 = "classical-exception-2"
TAG_IMPROVED = "improved-bound-pass"
EXTERNAL = "requires external constant"


# -- helper functions usable inside row formulas --------------------------------

def _aut_bound(M, Q):
    """2 (Q^M + Q^(M-1)); a trivial group (M = 0) gets the bound 1."""
    if M == 0:
        return Integer(1)
    return 2 * (Q**M + Q**(M - 1))


class I2Sp(Function):
    """Upper bound for i_2 of Sp_dim(Q), type C_(dim/2)."""

    @classmethod
    def eval(cls, dim, Q):
        if dim.is_Integer:
            k = int(dim) // 2
            if k == 1:
                # the sharper A_1 bound: i_2(SL_2(Q)) < Q^2
                return Q**2
            return _aut_bound(k * k + k, Q)


class I2O(Function):
    """Upper bound for i_2 of an orthogonal group of dimension dim (type B or D)."""

    @classmethod
    def eval(cls, dim, Q):
        if dim.is_Integer:
            dim = int(dim)
            k = dim // 2
            M = k * k if dim % 2 == 0 else k * k + k
            return _aut_bound(M, Q)


def I2Prod(a, b):
    """i_2(A x B) <= i_2(A) + i_2(B) + i_2(A) i_2(B)."""
    return a + b + a * b


class CeilPow(Function):
    """ceil(c * Q^e) for positive integers c, Q and rational e, exactly."""

    @classmethod
    def eval(cls, c, Q, e):
        if c.is_Integer and Q.is_Integer and e.is_Rational:
            a, b = int(e.p), int(e.q)
            root, exact = sympy.integer_nthroot(int(c)**b * int(Q)**a, b)
            return Integer(root if exact else root + 1)


class NPrimes(Function):
    """Number of distinct prime divisors."""

    @classmethod
    def eval(cls, k):
        if k.is_Integer:
            return Integer(len(sympy.primefactors(int(k))))


class LargestPrime(Function):
    @classmethod
    def eval(cls, k):
        if k.is_Integer:
            return Integer(max(sympy.primefactors(int(k))))


def cyclotomic(k: int, Q: int) -> int:
    """Phi_k(Q) as the Moebius product of (Q^j - 1) over divisors j of k."""
    if k < 1 or Q < 2:
        raise ArgumentError("cyclotomic needs k >= 1 and q >= 2")
    num = 1
    den = 1
    for j in sympy.divisors(k):
        mu = sympy.mobius(k // j)
        if mu == 1:
            num *= Q**j - 1
        elif mu == -1:
            den *= Q**j - 1
    value, rem = divmod(num, den)
    if rem:
        raise IntegrityError(f"Phi_{k}({Q}) is not an integer")
    return value


class Phi(Function):
    @classmethod
    def eval(cls, k):
        if k.is_Integer:
            return sympy.cyclotomic_poly(int(k), q)


_NAMESPACE = {
    "q": q, "n": n, "m": m, "d": d, "eps": eps,
    "Phi": Phi, "I2Sp": I2Sp, "I2O": I2O, "I2Prod": I2Prod,
    "NPrimes": NPrimes, "LargestPrime": LargestPrime, "CeilPow": CeilPow,
    "gcd": sympy.gcd, "floor": sympy.floor, "ceiling": sympy.ceiling,
    "sqrt": sympy.sqrt,
}


@lru_cache(maxsize=None)
def _parse(text):
    return sympy.sympify(text, locals=_NAMESPACE)


# -- specs ------------------------------------------------------------------------

@dataclass(frozen=True)
class LieSpec:
    """A group of Lie type: family, rank parameter (n or m), sign, field size."""

    family: str
    q: int
    param: int | None = None
    epsilon: int | None = None

    def __post_init__(self):
        f = self.family
        if f not in tables.EXCEPTIONAL + tables.CLASSICAL:
            raise ArgumentError(f"unknown family {f!r}")
        pp = sympy.factorint(self.q) if self.q >= 2 else {}
        if len(pp) != 1:
            raise ArgumentError(f"q = {self.q} is not a prime power")
        if f in ("E6", "L", "POmega_even"):
            if self.epsilon not in (1, -1):
                raise ArgumentError(f"{f} needs epsilon = +1 or -1")
        elif self.epsilon is not None:
            raise ArgumentError(f"{f} takes no epsilon")
        if f in tables.EXCEPTIONAL:
            if self.param is not None:
                raise ArgumentError(f"{f} takes no rank parameter")
            (p, k), = pp.items()
            if f in ("2F4", "2B2") and not (p == 2 and k % 2 == 1):
                raise ArgumentError(f"{f} needs q an odd power of 2")
            if f == "2G2" and not (p == 3 and k % 2 == 1):
                raise ArgumentError("2G2 needs q an odd power of 3")
        else:
            minimum = {"L": 4, "PSp": 2, "POmega_odd": 3, "POmega_even": 4}[f]
            if self.param is None or self.param < minimum:
                raise ArgumentError(f"{f} needs a rank parameter >= {minimum}")
            if f == "POmega_odd" and self.q % 2 == 0:
                raise ArgumentError("POmega_odd needs q odd")

    @property
    def name(self) -> str:
        sign = {1: "+", -1: "-", None: ""}[self.epsilon]
        if self.family in tables.EXCEPTIONAL:
            if self.family == "E6":
                return f"E6{sign}({self.q})"
            return f"{self.family}({self.q})"
        if self.family == "L":
            return f"L{self.param}{sign}({self.q})"
        if self.family == "PSp":
            return f"PSp{2 * self.param}({self.q})"
        if self.family == "POmega_odd":
            return f"POmega{2 * self.param + 1}({self.q})"
        return f"POmega{2 * self.param}{sign}({self.q})"

    def as_dict(self) -> dict:
        return {"family": self.family, "param": self.param,
                "epsilon": self.epsilon, "q": self.q, "name": self.name}

    def _values(self):
        vals = {q: Integer(self.q)}
        if self.epsilon is not None:
            vals[eps] = Integer(self.epsilon)
        if self.family == "L":
            vals[n] = Integer(self.param)
        elif self.param is not None:
            vals[m] = Integer(self.param)
        return vals


def _matches(spec: LieSpec, cond: dict) -> bool:
    for key, want in cond.items():
        if key == "eps":
            if spec.epsilon != want:
                return False
        elif key in ("n", "m"):
            have = spec.param
            if want == "even" and have % 2 or want == "odd" and not have % 2:
                return False
            if isinstance(want, int) and have != want:
                return False
        elif key == "q":
            if want == "even" and spec.q % 2 or want == "odd" and not spec.q % 2:
                return False
            if isinstance(want, int) and spec.q != want:
                return False
        elif key == "q_min":
            if spec.q < want:
                return False
        elif key == "m_min":
            if spec.param < want:
                return False
        else:
            raise KeyError(key)
    return True


def _row(rows, spec):
    for k, (family, cond, *formulas) in enumerate(rows):
        if family in (spec.family, None) and _matches(spec, cond):
            label = family or "any"
            if cond:
                label += "[" + ",".join(f"{a}={b}" for a, b in sorted(cond.items())) + "]"
            return label, formulas
    return None, None


def _evaluate(text, values, what):
    expr = _parse(text).xreplace(values)
    if not expr.is_Integer:
        raise IntegrityError(f"{what} evaluated to non-integer {expr}")
    return int(expr)


def _lookup(rows, spec, values, what):
    label, formulas = _row(rows, spec)
    if label is None:
        raise ArgumentError(f"no {what} row for {spec.name}")
    return label, _evaluate(formulas[0], values, f"{what} of {spec.name}")


# -- single quantities ------------------------------------------------------------

def index_d(spec: LieSpec) -> int:
    return _lookup(tables.INDEX, spec, spec._values(), "index")[1]


def torus_order(spec: LieSpec) -> int:
    """|<x>| for the cyclic maximal torus of the family."""
    values = spec._values()
    values[d] = Integer(index_d(spec))
    return _lookup(tables.TORUS, spec, values, "torus")[1]


def mg_exponent(spec: LieSpec) -> int:
    values = spec._values()
    return _evaluate(tables.UPPER_EXPONENT[spec.family], values, "upper exponent")


def i2_aut_upper(spec: LieSpec) -> int:
    """2 (q^M + q^(M-1)), an upper bound for the involutions of Aut(G)."""
    M = mg_exponent(spec)
    return 2 * (spec.q**M + spec.q**(M - 1))


def lower_exponent(spec: LieSpec) -> int:
    text, _ = tables.LOWER_EXPONENT[spec.family]
    return _evaluate(text, spec._values(), "lower exponent")


def i2_lower(spec: LieSpec) -> int:
    """floor(q^N / c) with c = 2 (exceptional, except E7) or 4."""
    _, den = tables.LOWER_EXPONENT[spec.family]
    return spec.q**lower_exponent(spec) // den


# -- reports ------------------------------------------------------------------------

@dataclass
class BoundReport:
    spec: LieSpec
    d: int | None
    torus_order: int | None
    T_order: int | None
    i2_lower: int | None
    cent_upper: int | None
    summax_upper: int | None
    rhs: int | None
    passed: bool | None
    exception_tag: str | None = None
    rows: dict = field(default_factory=dict)
    improved: dict | None = None
    note: str | None = None

    @property
    def untagged_failure(self) -> bool:
        return self.passed is False and self.exception_tag is None

    def as_dict(self) -> dict:
        out = asdict(self)
        out["spec"] = self.spec.as_dict()
        out["pass"] = out.pop("passed")
        return out


def _in_list(spec, entries):
    for family, param, sign, qq in entries:
        if (family == spec.family and param == spec.param
                and (sign is None or sign == spec.epsilon)
                and (qq is None or qq == spec.q)):
            return True
    return False


def _generic(spec, *, exact_rows=()):
    values = spec._values()
    dv = index_d(spec)
    values[d] = Integer(dv)
    rows = {}
    rows["torus"], torus = _lookup(tables.TORUS, spec, values, "torus")
    rows["centralizer"], cent = _lookup(tables.CENTRALIZER, spec, values, "centralizer")
    rows["overgroups"], summ = _lookup(tables.OVERGROUPS, spec, values, "overgroup sum")
    label, formulas = _row(exact_rows, spec)
    if label is not None:
        rows["i2"] = "exact:" + label
        lower = _evaluate(formulas[0], values, "exact i2")
    else:
        rows["i2"] = "lower:" + spec.family
        lower = i2_lower(spec)
    T = dv * torus
    rhs = T * cent + summ
    return BoundReport(spec, dv, torus, T, lower, cent, summ, rhs, lower > rhs, rows=rows)


def _external(spec, constants):
    data = (constants or {}).get(spec.name)
    if data is None:
        return BoundReport(spec, None, None, None, None, None, None, None, None,
                           note=EXTERNAL)
    values = spec._values()
    dv = index_d(spec)
    values[d] = Integer(dv)
    _, torus = _lookup(tables.TORUS, spec, values, "torus")
    T = dv * torus
    rhs = T * data["cent"] + data["sum"]
    return BoundReport(spec, dv, torus, T, data["i2"], data["cent"], data["sum"], rhs,
                       data["i2"] > rhs, rows={"i2": "supplied", "centralizer": "supplied",
                                               "overgroups": "supplied"},
                       note="supplied constants")


def exceptional_domain(spec: LieSpec) -> str:
    """'generic', 'external' or 'excluded' for an exceptional spec."""
    f, Q = spec.family, spec.q
    if (f, Q) in tables.EXTERNAL_CONSTANT:
        return "external"
    if f == "G2" and Q == 2 or f == "2G2" and Q == 3 or f == "2B2" and Q == 2:
        return "excluded"
    return "generic"


def check_exceptional(spec: LieSpec, constants: dict | None = None) -> BoundReport:
    """Inequality i_2(G) > |T| i_2(C_G(t0)) + sum i_2(M) for an exceptional group.

    G_2(3), G_2(4) and 2F4(2)' need character-table constants; without
    ``constants`` (keyed by spec name, with keys i2, cent, sum) their report
    carries ``passed = None`` and a note instead of invented numbers.
    """
    if spec.family not in tables.EXCEPTIONAL:
        raise ArgumentError(f"{spec.name} is not exceptional")
    dom = exceptional_domain(spec)
    if dom == "excluded":
        raise ArgumentError(f"{spec.name} is outside the exceptional sweep domain")
    if dom == "external":
        return _external(spec, constants)
    return _generic(spec, exact_rows=tables.EXACT_INVOLUTIONS)


def check_classical(spec: LieSpec) -> BoundReport:
    """Inequality (generic rows) plus exception-list tagging for a classical group."""
    if spec.family not in tables.CLASSICAL:
        raise ArgumentError(f"{spec.name} is not classical")
    rep = _generic(spec)
    if _in_list(spec, tables.EXCLUDED_SEARCH):
        rep.exception_tag = TAG_EXCLUDED
        return rep
    if rep.passed:
        return rep
    if _in_list(spec, tables.EXCEPTION_LIST_1):
        label, (lower_text, cent_text) = _row(tables.IMPROVED, spec)
        values = spec._values()
        values[d] = Integer(rep.d)
        # floor of the fraction; exactness as in the generic lower bound
        lower = sympy.floor(_parse(lower_text).xreplace(values))
        cent = _evaluate(cent_text, values, "improved centralizer")
        rhs = rep.T_order * cent + rep.summax_upper
        ok = int(lower) > rhs
        rep.improved = {"row": "improved:" + label, "i2_lower": int(lower),
                        "cent_upper": cent, "rhs": rhs, "pass": ok}
        rep.exception_tag = TAG_IMPROVED if ok else TAG_LIST_1
    elif _in_list(spec, tables.EXCEPTION_LIST_2):
        rep.exception_tag = TAG_LIST_2
    return rep


def check(spec: LieSpec, constants: dict | None = None) -> BoundReport:
    if spec.family in tables.EXCEPTIONAL:
        return check_exceptional(spec, constants)
    return check_classical(spec)


# -- sweeps ---------------------------------------------------------------------

def prime_powers(limit: int) -> list:
    return [k for k in range(2, limit + 1) if len(sympy.factorint(k)) == 1]


def specs_for(family: str, q_max: int, rank_max: int) -> list:
    """Every valid spec of one family with q <= q_max and natural dimension <= rank_max."""
    out = []
    qs = prime_powers(q_max)
    signs = (1, -1) if family in ("E6", "L", "POmega_even") else (None,)
    if family in tables.EXCEPTIONAL:
        for Q in qs:
            for s in signs:
                try:
                    spec = LieSpec(family, Q, None, s)
                except ArgumentError:
                    continue
                if exceptional_domain(spec) != "excluded":
                    out.append(spec)
        return out
    if family == "L":
        params = range(4, rank_max + 1)
    else:
        low = 3 if family == "POmega_odd" else 4 if family == "POmega_even" else 2
        params = range(low, rank_max // 2 + 1)
    for k in params:
        for s in signs:
            for Q in qs:
                if family == "POmega_odd" and Q % 2 == 0:
                    continue
                out.append(LieSpec(family, Q, k, s))
    return out


def sweep(families, q_max: int, rank_max: int = 24, *, jobs: int = 1,
          constants: dict | None = None) -> list:
    """Reports for all specs of ``families``, in a fixed order independent of ``jobs``."""
    if q_max < 2:
        raise ArgumentError("q_max must be at least 2")
    specs = [s for f in families for s in specs_for(f, q_max, rank_max)]
    if jobs > 1 and len(specs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        from functools import partial
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(partial(check, constants=constants), specs, chunksize=16))
    return [check(s, constants) for s in specs]


def summarize(reports) -> dict:
    """Counts plus the failures that no exception list accounts for."""
    untagged = [r.spec.name for r in reports if r.untagged_failure]
    list1_fail = [r.spec.name for r in reports
                  if r.improved is not None and not r.improved["pass"]]
    tags = {}
    for r in reports:
        if r.exception_tag:
            tags[r.exception_tag] = tags.get(r.exception_tag, 0) + 1
    return {
        "checked": len(reports),
        "passed": sum(r.passed is True for r in reports),
        "failed": sum(r.passed is False for r in reports),
        "external": [r.spec.name for r in reports if r.passed is None],
        "tags": tags,
        "untagged_failures": untagged,
        "improved_recheck_failures": list1_fail,
        "non_monotone": non_monotone(reports),
    }


def non_monotone(reports) -> list:
    """Groups (family, param, sign) that fail again after having passed at a smaller q."""
    seen = {}
    bad = []
    for r in reports:
        if r.passed is None or r.exception_tag == TAG_EXCLUDED:
            continue
        key = (r.spec.family, r.spec.param, r.spec.epsilon)
        ok = r.passed or r.exception_tag == TAG_IMPROVED
        state = seen.get(key)
        if state == "passed" and not ok:
            bad.append(r.spec.name)
        if ok:
            seen[key] = "passed"
    return bad


# -- asymptotics ------------------------------------------------------------------

def _leading_exponent(expr):
    return sympy.limit(sympy.log(expr) / sympy.log(q), q, sympy.oo)


def degree_check(family: str, param: int | None = None, epsilon: int | None = None,
                 parity: str = "odd") -> dict:
    """Leading exponents in q of the lower bound and of the right-hand side.

    The generic rows are read with q symbolic and d = 1 (d is bounded in q,
    so it does not change exponents). ``parity`` picks the q parity for rows
    conditioned on it.
    """
    sample_q = {"odd": {"2G2": 27}.get(family, 7), "even": 8}[parity]
    if family in ("2F4", "2B2"):
        sample_q = 8
    spec = LieSpec(family, sample_q, param, epsilon)
    values = {k: v for k, v in spec._values().items() if k is not q}
    values[d] = Integer(1)
    lower = Integer(lower_exponent(spec))
    parts = []
    for rows in (tables.TORUS, tables.CENTRALIZER, tables.OVERGROUPS):
        _, formulas = _row(rows, spec)
        parts.append(_parse(formulas[0]).xreplace(values))
    torus, cent, summ = parts
    rhs = (torus * cent + summ).replace(CeilPow, lambda c, Q, e: c * Q**e)
    rhs = sympy.expand(rhs)
    label, formulas = _row(tables.EXACT_INVOLUTIONS, spec)
    if label is not None:
        lower = _leading_exponent(_parse(formulas[0]))
    deg = _leading_exponent(rhs)
    return {"family": family, "param": param, "epsilon": epsilon,
            "lower_exponent": lower, "rhs_exponent": deg,
            "dominates": bool(lower >= deg), "strict": bool(lower > deg)}


# -- sporadic arithmetic ------------------------------------------------------------

def sporadic_checks(facts=None, constants: dict | None = None) -> list:
    """count * i_2(centralizer) < i_2(G) for each quoted row.

    Rows whose i_2(G) is not given (in the row or in ``constants``, keyed by
    row id) report status EXTERNAL and no verdict.
    """
    rows = tables.SPORADIC_FACTS if facts is None else facts
    out = []
    for row in rows:
        lhs = row["count"] * row["centralizer_i2"]
        value = row.get("value")
        if value is None and constants:
            value = constants.get(row["id"])
        if value is None:
            status, ok = EXTERNAL, None
        else:
            ok = lhs < value
            status = "pass" if ok else "fail"
        out.append({"id": row["id"], "lhs": lhs, "target": row["target"],
                    "value": value, "pass": ok, "status": status})
    return out
