from fractions import Fraction

import pytest

from chevalley.errors import InconsistencyError
from chevalley.reference import read_records
from chevalley.roots import F4_FUNDAMENTAL_EUCLID, RootSystem, _f4_vectors, order_less


def test_counts(rs):
    assert len(rs.positive) == 24
    assert len(rs.all) == 48
    assert rs.max_height == 11
    assert len(rs.sums) == 816


def test_reference_rows(rs):
    for row in read_records("roots.csv"):
        r = rs.root(int(row["ordinal"]))
        assert r.quad == row["quad"]
        assert r.euclid_label == row["euclid"]
        assert r.height == int(row["height"])
        assert r.norm == int(row["norm"])


def test_ordinals_follow_order(rs):
    for x, y in zip(rs.positive, rs.positive[1:]):
        assert order_less(x, y)
    assert [r.label for r in rs.fundamental] == ["a", "b", "c", "d"]
    assert rs.index[rs.parse("a")] == 10


def test_negatives(rs):
    for k in range(1, 25):
        assert rs.root(-k) == -rs.root(k)
        assert rs.index[rs.root(-k)] == -k


@pytest.mark.parametrize(
    "text, ordinal",
    [("21", 21), ("-9", -9), ("1232", 21), ("-0122", -9), ("a+2b+3c+2d", 21), ("-b-2c-d", -8)],
)
def test_parse(rs, text, ordinal):
    assert rs.index[rs.parse(text)] == ordinal


@pytest.mark.parametrize("text", ["0", "25", "-25", "2000", "a+c", "e", "a++b", ""])
def test_parse_rejects(rs, text):
    with pytest.raises(KeyError):
        rs.parse(text)


def test_chains_and_cartan(rs):
    p = rs.parse
    assert rs.chain_p(p("c"), p("b")) == 0
    assert rs.chain_p(p("d"), p("b+2c+d")) == 1
    assert rs.chain_p(p("c"), p("b+c")) == 1
    assert rs.chain_q(p("c"), p("b")) == 2
    assert rs.cartan_integer(p("b"), p("c")) == -2
    assert rs.cartan_integer(p("c"), p("b")) == -1
    assert rs.cartan_integer(p("a"), p("d")) == 0


def test_coroots_are_integral(rs):
    for r in rs.all:
        coroot = rs.coroot_coeffs(r)
        if r.norm == 2:
            assert coroot[:2] == r.coeffs[:2]
        assert sum(abs(x) for x in coroot) > 0


def test_chain_property(rs):
    # p - q = cartan integer for every pair of non-proportional roots
    for r in rs.all:
        for s in rs.all:
            if s in (r, -r):
                continue
            assert rs.chain_p(r, s) - rs.chain_q(r, s) == rs.cartan_integer(s, r)


def test_bad_basis_rejected():
    half = Fraction(1, 2)
    wrong = ((0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 0, 1), (half, half, half, half))
    wrong = tuple(tuple(Fraction(x) for x in v) for v in wrong)
    with pytest.raises(InconsistencyError):
        RootSystem(wrong, _f4_vectors())


def test_standard_basis_builds():
    rs = RootSystem(F4_FUNDAMENTAL_EUCLID, _f4_vectors())
    assert rs.root(24).quad == "2342"
