import math

import pytest

from chiralscope import corpus
from chiralscope.corpus.fields import field, prime_power
from chiralscope.corpus.files import parse_group_text, parse_pair_text
from chiralscope.errors import ArgumentError, IntegrityError, ParseError
from chiralscope.perm import Permutation


def psl2_order(q):
    return q * (q * q - 1) // math.gcd(2, q - 1)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 169])
def test_psl2_orders(q):
    g = corpus.psl2(q)
    assert g.degree == q + 1
    assert g.group().order == psl2_order(q)


def test_psl2_out_orders():
    assert corpus.psl2(7).out_order == 2
    assert corpus.psl2(8).out_order == 3
    assert corpus.psl2(9).out_order == 4
    assert corpus.psl2(16).out_order == 4


@pytest.mark.parametrize("n", range(3, 14))
def test_alternating_orders(n):
    assert corpus.alternating(n).group().order == math.factorial(n) // 2


def test_out_order_of_a6():
    assert corpus.alternating(6).out_order == 4
    assert corpus.alternating(7).out_order == 2


@pytest.mark.parametrize("q,p,k", [(2, 2, 1), (9, 3, 2), (64, 2, 6), (169, 13, 2)])
def test_prime_power(q, p, k):
    assert prime_power(q) == (p, k)


@pytest.mark.parametrize("q", [1, 6, 12, 100])
def test_not_prime_power(q):
    assert prime_power(q) is None


@pytest.mark.parametrize("q", [4, 8, 9, 25, 27, 49, 64])
def test_field_axioms(q):
    F = field(q)
    els = list(F)
    assert len(els) == q
    nonzero = [a for a in els if a]
    for a in nonzero:
        assert a * a.inverse() == F.element(1)
    # the multiplicative group is cyclic of order q - 1
    orders = set()
    for a in nonzero:
        b, k = a, 1
        while b != F.element(1):
            b, k = b * a, k + 1
        orders.add(k)
    assert max(orders) == q - 1
    a, b, c = nonzero[1], nonzero[-1], nonzero[len(nonzero) // 2]
    assert a * (b + c) == a * b + a * c


def test_lookup_names():
    assert corpus.lookup("psl2(11)").group().order == 660
    assert corpus.lookup("PSL2:11").name == corpus.lookup("psl2:11").name
    assert corpus.lookup("M11").out_order == 1
    with pytest.raises(ArgumentError):
        corpus.lookup("Monster")


def test_builtin_names_resolve():
    for name in corpus.builtin_names():
        g = corpus.lookup(name)
        assert g.known_order is not None


@pytest.mark.parametrize("n,typ", [(8, (7, 7)), (9, (9, 15)), (10, (9, 9)),
                                   (11, (11, 21)), (12, (11, 11)), (13, (13, 9))])
def test_alternating_known_pairs(n, typ):
    p = corpus.known_pair_alternating(n)
    assert p.t == Permutation.parse("(1,2)(3,4)" if n % 2 == 0 else "(1,2)(3,6)", n)
    assert (p.x.order(), p.y.order()) == typ


def test_mathieu_pairs_data():
    m23, m24 = corpus.known_pair_m23(), corpus.known_pair_m24()
    assert (m23.x.order(), m23.t.order(), m23.y.order()) == (11, 2, 15)
    assert (m24.x.order(), m24.t.order(), m24.y.order()) == (23, 2, 15)
    assert corpus.mathieu("M23").group().contains(m23.t)
    # the printed M24 pair generates a different copy of M24 inside S_24
    assert not corpus.mathieu("M24").group().contains(m24.t)


def test_group_file_parsing():
    text = "# A5\ndegree 5\n(1,2,3,4,5)  # a five-cycle\n\n(1,2)(3,4)\n"
    degree, gens = parse_group_text(text)
    assert degree == 5 and [str(g) for g in gens] == ["(1,2,3,4,5)", "(1,2)(3,4)"]
    g = corpus.parse_group_file(text, "A5")
    assert g.group().order == 60


def test_group_file_round_trip():
    g = corpus.mathieu("M12")
    again = corpus.parse_group_file(corpus.format_group_file(g), "M12")
    assert again.generators == g.generators


def test_pair_file_forms():
    plain = "degree 5\n(1,2,3,4,5)\n(1,2)(3,4)\npair\n(1,2,3,4,5)\n(1,2)(3,4)\n"
    named, pair = corpus.parse_pair_file(plain)
    assert str(pair.t) == "(1,2)(3,4)"
    y = pair.y
    rot = f"degree 5\nrotations\n(1,2,3,4,5)\n{y}\n"
    named2, pair2 = corpus.parse_pair_file(rot)
    assert pair2 == pair
    # no generators: the ambient group is <x, t>
    assert named2.group().order == 60


def test_pair_file_continuation_lines():
    text = "degree 8\npair\n(1,2,3,4,\n  5,6,7)\n(1,2)(3,4)\n"
    _, _, x, t = parse_pair_text(text)
    assert str(x) == "(1,2,3,4,5,6,7)"


@pytest.mark.parametrize("text", [
    "degree x\n(1,2)\n",
    "(1,2)\n",
    "degree 3\n(1,4)\n",
    "degree 3\n(1,2\n",
    "degree 5\npair\n(1,2,3)\n",
])
def test_malformed_files(text):
    with pytest.raises(ParseError):
        corpus.parse_pair_file(text) if "pair" in text else corpus.parse_group_file(text)


def test_order_mismatch_is_reported():
    g = corpus.NamedGroup("bogus", 5, corpus.alternating(5).generators, known_order=61)
    with pytest.raises(IntegrityError):
        g.group()
