import random

import pytest

from chevalley.constants import (
    find_extraspecial,
    random_assignment,
    require_total,
    solve_constants,
    special_pairs,
    zero_sum_quadruples,
    zero_sum_triples,
)
from chevalley.errors import InconsistencyError, MissingSymbol
from chevalley.signs import SignMonomial, all_plus


def test_extraspecial_structure(rs):
    choice = find_extraspecial(rs)
    assert len(choice.pairs) == 20
    # one extraspecial pair per positive non-simple root
    sums = sorted(rs.root_sum(r, s).coeffs for r, s in choice.pairs)
    assert sums == sorted(r.coeffs for r in rs.positive if r.height > 1)
    assert all(r in rs.fundamental for r, _ in choice.pairs)
    assert len(set(choice.symbols)) == 20
    families = [s.family for s in choice.symbols]
    assert families.count("epsilon") == 10 and families.count("alpha") == 1


def test_extraspecial_is_minimal(rs):
    choice = find_extraspecial(rs)
    by_sum = special_pairs(rs)
    for r, s in choice.pairs:
        t = rs.root_sum(r, s)
        assert all(r.coeffs <= x.coeffs for x, _ in by_sum[t])


def test_table_is_total(rs, table):
    assert len(table) == 816
    for r, s in rs.sums:
        assert not table.entry(r, s).is_zero()


def test_magnitudes_match_chain_length(rs, table):
    for r, s in rs.sums:
        assert abs(table.entry(r, s).coeff) == rs.chain_p(r, s) + 1


def test_antisymmetry(rs, table):
    for r, s in rs.sums:
        assert table.entry(s, r) == -table.entry(r, s)
        assert table.entry(-r, -s) * table.entry(r, s) == -(table.entry(r, s) * table.entry(r, s))


def test_every_value_is_a_single_monomial(rs, table):
    for r, s in rs.sums:
        m = table.entry(r, s)
        assert isinstance(m, SignMonomial) and m.coeff.denominator == 1


def test_spot_values(rs, table):
    p = rs.parse
    assert str(table.entry(p("c+d"), p("b+c"))) == "e13d2"
    assert str(table.entry(p("b+2c+d"), p("a+2b+2c+d"))) == "-2e30d1256g3"
    assert str(table.entry(p("a+b+2c+2d"), p("a+2b+2c"))) == "-e6780d3456g13a1"


def test_specialized_choice_solves_to_specialized_table(rs, table):
    rng = random.Random(3)
    choice = find_extraspecial(rs)
    for _ in range(3):
        a = random_assignment(table.symbols, rng)
        direct = solve_constants(rs, choice.specialized(a))
        assert direct.specialize({}).values == table.specialize(a).values


@pytest.mark.parametrize("factor", [2, 3])
def test_wrong_magnitude_rejected(rs, factor):
    choice = find_extraspecial(rs)
    values = dict(choice.values)
    values[choice.pairs[0]] = values[choice.pairs[0]] * factor
    with pytest.raises(InconsistencyError):
        solve_constants(rs, type(choice)(choice.pairs, values))


def test_overdetermined_choice_rejected(rs):
    # adding a non-extraspecial pair with the wrong sign contradicts propagation
    choice = find_extraspecial(rs)
    table = solve_constants(rs, choice)
    p = rs.parse
    extra = (p("c+d"), p("b+c"))
    values = dict(choice.values)
    values[extra] = -table.entry(*extra)
    with pytest.raises(InconsistencyError):
        solve_constants(rs, type(choice)(choice.pairs + (extra,), values))


def test_zero_sum_sets(rs):
    triples = zero_sum_triples(rs)
    assert len(triples) == 816
    for a, b, c in triples:
        assert all(x + y + z == 0 for x, y, z in zip(a.coeffs, b.coeffs, c.coeffs))
    quads = zero_sum_quadruples(rs)
    assert quads
    for q in quads[:2000]:
        assert all(sum(x) == 0 for x in zip(*(r.coeffs for r in q)))


def test_require_total(table):
    plus = all_plus(table.symbols)
    require_total(plus, table.symbols)
    plus.pop(next(iter(plus)))
    with pytest.raises(MissingSymbol):
        require_total(plus, table.symbols)
