import random

import numpy as np
import pytest

from chevalley.checks import (
    AdjointModel,
    jacobi_defect,
    jacobi_failures,
    jacobi_oracle,
    structure_tensor,
    verify_relations,
)


def _pairs(rs):
    return sorted(rs.sums, key=lambda p: (p[0].coeffs, p[1].coeffs))


def test_clean_tables_pass(plus, random_tables):
    for t in [plus] + random_tables:
        report = verify_relations(t)
        assert report.ok, report.summary()
        assert jacobi_oracle(t)


def test_every_single_sign_flip_is_caught(rs, plus):
    # flipping one constant breaks (i) alone, so scan all pairs cheaply
    for r, s in _pairs(rs)[::17]:
        bad = plus.with_value((r, s), -plus.value(r, s))
        assert not verify_relations(bad).ok
        assert not jacobi_oracle(bad)


def test_consistent_flip_still_caught_by_other_relations(rs, plus):
    # flip N(r,s) together with N(s,r) so (i) holds; (ii)-(iv) or Jacobi must object
    rng = random.Random(8)
    for r, s in rng.sample(_pairs(rs), 25):
        bad = plus.with_value((r, s), -plus.value(r, s)).with_value((s, r), plus.value(r, s))
        report = verify_relations(bad)
        assert not report.ok
        assert {name for name, _ in report.violations} - {"i"}
        assert jacobi_failures(bad)


def test_magnitude_change_caught(rs, plus):
    r, s = rs.parse("c"), rs.parse("b+c")
    bad = plus.with_value((r, s), 3 * plus.value(r, s))
    assert not verify_relations(bad).ok


def test_structure_tensor_shape_and_antisymmetry(plus):
    c = structure_tensor(plus)
    assert c.shape == (52, 52, 52)
    assert np.array_equal(c, -c.transpose(1, 0, 2))
    assert not jacobi_defect(plus).any()


def test_adjoint_elements(rs, plus):
    model = AdjointModel(plus)
    a, b = rs.parse("a"), rs.parse("b")
    eye = np.eye(52, dtype=np.int64)
    assert np.array_equal(model.element(a, 0), eye)
    assert np.array_equal(model.product([(a, 2), (a, -2)]), eye)
    assert np.array_equal(model.product([(a, 2), (a, 5)]), model.element(a, 7))
    # orthogonal simple roots commute
    d = rs.parse("d")
    assert np.array_equal(model.commutator(a, 3, d, 5), eye)
    assert not np.array_equal(model.commutator(b, 3, a, 5), eye)


@pytest.mark.parametrize("seed", range(3))
def test_zeroed_constant_caught(rs, plus, seed):
    rng = random.Random(seed)
    r, s = rng.choice(_pairs(rs))
    bad = plus.with_value((r, s), 0).with_value((s, r), 0)
    assert not verify_relations(bad).ok
