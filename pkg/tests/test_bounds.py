import pytest
import sympy

from chiralscope import bounds
from chiralscope.bounds import LieSpec, tables
from chiralscope.errors import ArgumentError


def spec(family, q, param=None, eps=None):
    return LieSpec(family, q, param, eps)


@pytest.mark.parametrize("k,Q,value", [(1, 5, 4), (2, 3, 4), (12, 2, 13), (30, 2, 331),
                                       (9, 2, 73), (18, 3, 703)])
def test_cyclotomic_values(k, Q, value):
    assert bounds.cyclotomic(k, Q) == value


def test_cyclotomic_against_expanded_polynomials():
    x = sympy.Symbol("x")
    for Q in (2, 3, 5, 7):
        assert bounds.cyclotomic(12, Q) == Q**4 - Q**2 + 1
        assert bounds.cyclotomic(30, Q) == int(sympy.Poly(
            x**8 + x**7 - x**5 - x**4 - x**3 + x + 1).eval(Q))


@pytest.mark.parametrize("Q", [2, 3, 4, 5, 7, 8, 9])
def test_cyclotomic_product_identity(Q):
    for k in range(1, 61):
        prod = 1
        for dv in sympy.divisors(k):
            prod *= bounds.cyclotomic(dv, Q)
        assert prod == Q**k - 1


@pytest.mark.parametrize("s,order", [
    (spec("E8", 2), 331), (spec("F4", 2), 17), (spec("2B2", 8), 13),
    (spec("E7", 2), 129), (spec("G2", 3), 13), (spec("2B2", 32), 41),
    (spec("2G2", 27), 37), (spec("L", 4, 4, 1), 85), (spec("L", 4, 5, 1), 341),
])
def test_torus_orders(s, order):
    assert bounds.torus_order(s) == order


@pytest.mark.parametrize("Q", [8, 32, 128, 512])
def test_suzuki_torus_divides_group_order(Q):
    order = Q**2 * (Q**2 + 1) * (Q - 1)
    assert order % bounds.torus_order(spec("2B2", Q)) == 0


def test_exponents_and_upper_bound():
    assert bounds.mg_exponent(spec("E8", 2)) == 128
    assert bounds.mg_exponent(spec("2B2", 8)) == 3
    assert bounds.i2_aut_upper(spec("G2", 3)) == 17496 == 2 * (3**8 + 3**7)


def test_lower_bounds():
    assert bounds.i2_lower(spec("L", 3, 4, 1)) == 3**8 // 4
    assert bounds.i2_lower(spec("E7", 3)) == 3**70 // 4
    assert bounds.i2_lower(spec("2B2", 8)) == 256


def test_suzuki_exact_check():
    r = bounds.check(spec("2B2", 8))
    assert (r.T_order, r.cent_upper, r.rhs, r.i2_lower) == (13, 7, 91, 455)
    assert r.passed and r.rows["i2"] == "exact:2B2"


def test_e8_two():
    r = bounds.check(spec("E8", 2))
    assert r.i2_lower == 2**127
    assert r.rhs == 331 * 2 * 2**84 * (2**20 + 2**19)
    assert r.passed


@pytest.mark.parametrize("Q", [2, 3, 4, 5, 7, 8, 9, 16, 27, 64, 1024])
def test_triality_has_no_overgroup_term(Q):
    r = bounds.check(spec("3D4", Q))
    assert r.summax_upper == 0 and r.passed


def test_classical_examples():
    assert bounds.check(spec("L", 5, 7, 1)).passed
    for e in (1, -1):
        r = bounds.check(spec("L", 7, 4, e))
        assert r.passed is False
        assert r.exception_tag == bounds.TAG_IMPROVED
        assert r.improved["cent_upper"] == 2 * 7**4
        assert r.improved["i2_lower"] == 7**8 // 2
    r = bounds.check(spec("POmega_even", 4, 4, 1))
    assert r.exception_tag == bounds.TAG_IMPROVED
    assert r.improved["row"] == "improved:POmega_even[m=4,q=even]"


def test_search_list_is_tagged():
    r = bounds.check(spec("L", 2, 4, 1))
    assert r.exception_tag == bounds.TAG_EXCLUDED


def test_external_constants():
    r = bounds.check(spec("G2", 3))
    assert r.passed is None and r.note == bounds.EXTERNAL
    supplied = {"G2(3)": {"i2": 10**6, "cent": 10, "sum": 5}}
    r = bounds.check(spec("G2", 3), constants=supplied)
    assert r.rhs == 13 * 10 + 5 and r.passed


def test_report_names_rows():
    r = bounds.check(spec("L", 4, 4, 1))
    assert r.rows == {"torus": "L[eps=1]", "centralizer": "L[n=even]",
                      "overgroups": "L[n=even]", "i2": "lower:L"}


@pytest.mark.parametrize("args", [
    ("E8", 6), ("E6", 4), ("L", 4, 3, 1), ("L", 4, 4), ("2B2", 4), ("2G2", 9),
    ("POmega_odd", 4, 3), ("POmega_even", 4, 3, 1), ("XY", 4),
])
def test_invalid_specs(args):
    with pytest.raises(ArgumentError):
        LieSpec(*args)


def test_excluded_exceptional_specs():
    for s in (spec("G2", 2), spec("2G2", 3), spec("2B2", 2)):
        with pytest.raises(ArgumentError):
            bounds.check_exceptional(s)


def test_names():
    assert spec("L", 4, 5, 1).name == "L5+(4)"
    assert spec("PSp", 2, 5).name == "PSp10(2)"
    assert spec("POmega_even", 4, 4, -1).name == "POmega8-(4)"
    assert spec("E6", 2, eps=-1).name == "E6-(2)"


def test_single_spec_sweep_matches_check():
    reps = bounds.sweep(["2B2"], 32)
    assert [r.spec.q for r in reps] == [8, 32]
    assert all(r.passed for r in reps)
    assert reps[0] == bounds.check(spec("2B2", 8))


def test_sweep_parallel_matches_serial():
    a = bounds.sweep(["PSp", "E6"], 16, 12, jobs=1)
    b = bounds.sweep(["PSp", "E6"], 16, 12, jobs=3)
    assert a == b


def test_lower_below_upper():
    for family in tables.EXCEPTIONAL + tables.CLASSICAL:
        for s in bounds.specs_for(family, 32, 12):
            assert bounds.i2_lower(s) < bounds.i2_aut_upper(s), s.name


@pytest.mark.parametrize("family", tables.EXCEPTIONAL)
def test_degree_dominates_exceptional(family):
    eps = 1 if family == "E6" else None
    assert bounds.degree_check(family, epsilon=eps)["dominates"]


@pytest.mark.parametrize("family,param,eps", [
    ("L", 7, 1), ("L", 8, -1), ("PSp", 5, None), ("POmega_odd", 5, None),
    ("POmega_even", 6, 1), ("POmega_even", 7, -1),
])
def test_degree_dominates_classical(family, param, eps):
    r = bounds.degree_check(family, param, eps)
    assert r["strict"], r


def test_sporadic_checks():
    rows = {r["id"]: r for r in bounds.sporadic_checks()}
    assert rows["J4"]["lhs"] == 29 * 280831 == 8144099
    assert rows["J4"]["pass"] is True
    assert rows["Ly"]["status"] == bounds.EXTERNAL and rows["Ly"]["pass"] is None
    assert bounds.sporadic_checks(facts=[]) == []
    rows = {r["id"]: r for r in bounds.sporadic_checks(constants={"Ly": 10**12})}
    assert rows["Ly"]["pass"] is True
