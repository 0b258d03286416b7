import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chevalley.checks import AdjointModel
from chevalley.collector import Collector, GroupWord, element, random_word, theorem6_check, theorem6_series
from chevalley.errors import HeightOverflow
from chevalley.polynomial import TPolynomial
from chevalley.roots import build_f4

t, u = TPolynomial.var("t"), TPolynomial.var("u")


@pytest.fixture(scope="module")
def col(plus):
    return Collector(plus)


def test_simple_swap(rs, col):
    a, b = rs.parse("a"), rs.parse("b")
    word = col.normalize([(a, t), (b, u)])
    assert word.render(rs) == "x[4](u) x[10](t) x[11](-t*u)"
    # already in normal form
    assert col.normalize([(b, u), (a, t)]).factors == ((b, u), (a, t))


def test_merge_and_cancel(rs, col):
    c = rs.parse("c")
    assert col.normalize([(c, t), (c, u)]).factors == ((c, t + u),)
    assert col.normalize([(c, t), (c, -t)]).factors == ()
    assert col.multiply(element(c, 3), element(c, -3)) == col.identity()
    assert element(c, 0).factors == ()


def test_negative_root_rejected(rs, col):
    with pytest.raises(ValueError):
        col.normalize([(-rs.parse("a"), t)])


def test_highest_root_is_central(rs, col):
    top = rs.root(24)
    for r in rs.positive:
        x = col.normalize([(top, t), (r, u)])
        y = col.normalize([(r, u), (top, t)])
        assert x == y


def test_normal_form_is_sorted(rs, col):
    rng = random.Random(4)
    rank = {r: k for k, r in enumerate(rs.positive)}
    for _ in range(50):
        w = col.normalize(random_word(rs, rng, 5).factors)
        ranks = [rank[r] for r in w.roots()]
        assert ranks == sorted(set(ranks))
        assert all(p for _, p in w.factors)


def test_naive_collection_agrees(rs, col):
    rng = random.Random(5)
    for _ in range(30):
        factors = random_word(rs, rng, 4, variables=("t1", "t2"), max_coeff=1).factors
        fast = col.normalize(factors)
        assert col.collect_naive(factors, "left") == fast
        assert col.collect_naive(factors, "right") == fast


def test_matches_adjoint_group(rs, random_tables):
    # evaluate words at integers and compare matrix products
    rng = random.Random(6)
    values = {"t1": 2, "t2": -1, "t3": 1}
    for table in random_tables[:2]:
        col = Collector(table)
        model = AdjointModel(table)
        for _ in range(20):
            word = random_word(rs, rng, 4, max_coeff=1)
            normal = col.normalize(word.factors)
            lhs = model.product((r, p.evaluate(values)) for r, p in word.factors)
            rhs = model.product((r, p.evaluate(values)) for r, p in normal.factors)
            assert np.array_equal(lhs, rhs)


def test_commutator_of_elements_matches_formula(rs, col):
    s, r = rs.parse("d"), rs.parse("b+2c")
    got = col.commutator(element(s, u), element(r, t))
    want = col.normalize(col.commutator_factors(s, u, r, t))
    assert got == want
    assert len(got) == 2


_RS = build_f4()
words = st.builds(
    lambda seed, n: random_word(_RS, random.Random(seed), n),
    st.integers(0, 10**6),
    st.integers(0, 4),
)


@given(words, words, words)
def test_group_axioms(col, x, y, z):
    x, y, z = (col.normalize(w.factors) for w in (x, y, z))
    assert col.multiply(col.multiply(x, y), z) == col.multiply(x, col.multiply(y, z))
    assert col.multiply(x, col.inverse(x)) == col.identity()
    assert col.multiply(col.identity(), x) == x
    assert col.inverse(col.inverse(x)) == x


def test_theorem6_known_value(rs, plus, col):
    res = theorem6_check(rs, plus, "a,b,c,d", 1, 10)
    assert res.ok
    assert res.actual[24] == {"t1": -24, "t2": 150, "t3": -168, "t4": 42}


@pytest.mark.parametrize("delta", ["a,b,c,d", "b,c,d", "a,c,d"])
def test_theorem6_random_signs(rs, random_tables, delta):
    for table in random_tables:
        for res in theorem6_series(rs, table, delta, 1, 10):
            assert res.ok, (delta, res.w, res.expected, res.actual)


@pytest.mark.parametrize("m", [2, 3])
def test_theorem6_higher_start(rs, plus, m):
    for res in theorem6_series(rs, plus, "a,b,c,d", m, 11 - m):
        assert res.ok, (m, res.w)


def test_height_overflow(rs, plus):
    with pytest.raises(HeightOverflow):
        theorem6_series(rs, plus, "a,b,c,d", 1, 11)
    with pytest.raises(HeightOverflow):
        theorem6_series(rs, plus, "a,b,c,d", 0, 3)


def test_word_helpers(rs):
    c = rs.parse("c")
    w = GroupWord(((c, t),), True)
    assert w.argument(c) == t
    assert w.argument(rs.parse("a")).is_zero()
    assert GroupWord().render(rs) == "1"
