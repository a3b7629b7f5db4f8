"""Randomized laws checked with hypothesis."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from chiralscope import corpus
from chiralscope.chirality import GenPair, classify_pair, enantiomorph, tuple_equivalent
from chiralscope.group import PermGroup, diagonal_pair_group
from chiralscope.perm import Permutation

from conftest import closure

SETTINGS = settings(max_examples=60, deadline=None,
                    suppress_health_check=[HealthCheck.function_scoped_fixture])


@st.composite
def perms(draw, degree=None):
    n = degree or draw(st.integers(1, 9))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_lists(draw, max_degree=7, max_len=3):
    n = draw(st.integers(1, max_degree))
    k = draw(st.integers(0, max_len))
    return n, [draw(perms(n)) for _ in range(k)]


@SETTINGS
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_group_laws(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).is_identity()
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert a ** a.order() == Permutation.identity(a.degree)


@SETTINGS
@given(perms())
def test_cycle_text_round_trip(p):
    assert Permutation.parse(str(p), p.degree) == p


@SETTINGS
@given(perm_lists())
def test_chain_order_matches_closure(data):
    n, gens = data
    G = PermGroup(n, gens)
    elements = closure(gens, n)
    assert G.order == len(elements)
    for img in list(elements)[:20]:
        assert G.contains(Permutation(img))


@SETTINGS
@given(perm_lists(max_degree=6, max_len=2))
def test_class_sizes_partition_group(data):
    n, gens = data
    G = PermGroup(n, gens)
    sizes = G.conjugacy_classes.sizes()
    assert sum(sizes) == G.order
    assert all(G.order % s == 0 for s in sizes)


@SETTINGS
@given(perm_lists(max_degree=5, max_len=2), perm_lists(max_degree=5, max_len=2))
def test_diagonal_group_order_bounds(left, right):
    n1, g1 = left
    n2, g2 = right
    k = min(len(g1), len(g2))
    if k == 0:
        return
    pairs = list(zip(g1[:k], g2[:k]))
    D = diagonal_pair_group(pairs)
    o1 = PermGroup(n1, g1[:k]).order
    o2 = PermGroup(n2, g2[:k]).order
    assert (o1 * o2) % D.order == 0
    assert D.order >= max(o1, o2)


A5 = corpus.alternating(5).group()
A5_ELEMENTS = list(A5.elements())
A5_INVOLUTIONS = A5.involutions


@SETTINGS
@given(st.sampled_from(A5_ELEMENTS), st.sampled_from(A5_INVOLUTIONS),
       st.sampled_from(A5_ELEMENTS))
def test_verdict_invariant_under_conjugation(x, t, g):
    a = classify_pair(A5, GenPair(x, t))
    b = classify_pair(A5, GenPair(x.conjugate(g), t.conjugate(g)))
    assert a == b


@SETTINGS
@given(st.sampled_from(A5_ELEMENTS), st.sampled_from(A5_INVOLUTIONS))
def test_enantiomorph_laws(x, t):
    p = GenPair(x, t)
    assert enantiomorph(enantiomorph(p)) == p
    v = classify_pair(A5, p)
    if v.generates:
        # no chiral pairs in A5, so the mirror is always reached
        assert tuple_equivalent(x, t, enantiomorph(p).x, t)
