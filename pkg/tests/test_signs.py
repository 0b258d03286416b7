from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chevalley.errors import MissingSymbol, MultiTerm
from chevalley.signs import (
    SignMonomial,
    SignPolynomial,
    SignSymbol,
    all_plus,
    all_symbols,
    as_monomial,
    evaluate,
    parse_assignment,
)

symbols = st.sampled_from(all_symbols())
coeffs = st.fractions(min_value=-6, max_value=6, max_denominator=3)
monomials = st.builds(SignMonomial, coeffs, st.frozensets(symbols, max_size=6))
polys = st.lists(monomials, max_size=4).map(SignPolynomial.from_monomials)
assignments = st.fixed_dictionaries({s: st.sampled_from([1, -1]) for s in all_symbols()})


def test_twenty_symbols():
    names = [s.name for s in all_symbols()]
    assert len(names) == 20
    assert names[:10] == ["e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9", "e0"]
    assert names[-1] == "a1"


@pytest.mark.parametrize("text", ["e13d2", "-2e30d1256g3", "-e6780d3456g13a1", "1", "-2", "3/2e1", "0"])
def test_parse_round_trip_examples(text):
    assert str(SignMonomial.parse(text)) == text


def test_canonical_ordering():
    m = SignMonomial.of(-2, "g3", "d6", "e0", "d1", "e3", "d5", "d2")
    assert str(m) == "-2e30d1256g3"
    assert m.pretty() == "-2ε_{30}δ_{1256}γ_3"


@pytest.mark.parametrize("text", ["", "-", "e", "e11", "d7", "g4", "a2", "x1", "/2", "2e1e2"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        SignMonomial.parse(text)


def test_symbols_square_to_one():
    e1 = SignMonomial.of(1, "e1")
    assert e1 * e1 == SignMonomial.of(1)
    assert SignMonomial.of(2, "e1", "d2") * SignMonomial.of(-3, "e1") == SignMonomial.of(-6, "d2")


def test_zero_drops_symbols():
    assert SignMonomial(Fraction(0), frozenset(all_symbols()[:3])) == SignMonomial.of(0)


def test_missing_symbol():
    with pytest.raises(MissingSymbol):
        SignMonomial.of(1, "e1", "d2").evaluate({SignSymbol("epsilon", 1): 1})


def test_as_monomial():
    p = SignPolynomial.from_monomials([SignMonomial.of(1, "e1"), SignMonomial.of(1, "e2")])
    with pytest.raises(MultiTerm):
        as_monomial(p)
    assert as_monomial(p - SignMonomial.of(1, "e2").to_poly()) == SignMonomial.of(1, "e1")
    assert as_monomial(SignPolynomial()).is_zero()


def test_parse_assignment():
    a = parse_assignment({"e0": -1, "a1": 1})
    assert a == {SignSymbol("epsilon", 10): -1, SignSymbol("alpha", 1): 1}
    with pytest.raises(ValueError):
        parse_assignment({"e1": 2})
    with pytest.raises(ValueError):
        parse_assignment({"z1": 1})


@given(monomials)
def test_monomial_round_trip(m):
    assert SignMonomial.parse(str(m)) == m


@given(monomials, monomials, monomials)
def test_monomial_group_laws(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    if not x.is_zero():
        assert x * x.inverse() == SignMonomial.of(1)


@given(polys, polys, polys)
def test_polynomial_ring_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == SignPolynomial()


@given(polys, polys, assignments)
def test_evaluation_is_a_homomorphism(x, y, a):
    assert evaluate(x * y, a) == evaluate(x, a) * evaluate(y, a)
    assert evaluate(x + y, a) == evaluate(x, a) + evaluate(y, a)


@given(monomials)
def test_all_plus_evaluates_to_coefficient(m):
    assert m.evaluate(all_plus()) == m.coeff
