"""Collection in the positive unipotent subgroup ``U`` of the Chevalley group.

A ``GroupWord`` is a product ``x_{r1}(p1) x_{r2}(p2) ...`` with positive roots
and integer-polynomial arguments.  The normal form lists roots in strictly
increasing ``≺`` order.  The only rewrite needed is

    x_s(u) x_r(t) = x_r(t) x_s(u) [x_s(u), x_r(t)]        (s ≻ r)

with the commutator expanded by the commutator formulas; every new factor
has a root strictly above ``r``, which bounds the recursion by height.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .constants import IntTable
from .errors import HeightOverflow
from .formulas import formula
from .graphs import build_graph, k_matrix
from .polynomial import TPolynomial
from .roots import Root, RootSystem

Factor = tuple[Root, TPolynomial]


@dataclass(frozen=True)
class GroupWord:
    factors: tuple[Factor, ...] = ()
    normalized: bool = False

    def __len__(self) -> int:
        return len(self.factors)

    def roots(self) -> list[Root]:
        return [r for r, _ in self.factors]

    def argument(self, root: Root) -> TPolynomial:
        """Argument of ``root`` in a normalized word (zero if absent)."""
        for r, p in self.factors:
            if r == root:
                return p
        return TPolynomial()

    def render(self, rs: RootSystem) -> str:
        if not self.factors:
            return "1"
        return " ".join(f"x[{rs.index[r]}]({p})" for r, p in self.factors)


def element(root: Root, arg: TPolynomial | int) -> GroupWord:
    if isinstance(arg, int):
        arg = TPolynomial.const(arg)
    return GroupWord(((root, arg),) if arg else (), True)


class Collector:
    """Normal-form arithmetic for one integer structure-constant table."""

    def __init__(self, table: IntTable):
        self.table = table
        self.rs = table.rs
        self._constants = table.as_constant_table()
        self._rank = {r: k for k, r in enumerate(self.rs.positive)}
        self._rules: dict[tuple[Root, Root], tuple[tuple[Root, int, int, int], ...]] = {}

    # rewrite data ------------------------------------------------------------

    def rule(self, s: Root, r: Root) -> tuple[tuple[Root, int, int, int], ...]:
        """Factors of ``[x_s(u), x_r(t)]`` as ``(root, coeff, i, j)``: ``x_root(coeff t^i u^j)``."""
        key = (s, r)
        if key not in self._rules:
            f = formula(self._constants, s, r)
            self._rules[key] = tuple((t.root, int(t.argument.coeff), t.i, t.j) for t in f.terms)
        return self._rules[key]

    def commutator_factors(self, s: Root, u: TPolynomial, r: Root, t: TPolynomial) -> list[Factor]:
        out = []
        for root, c, i, j in self.rule(s, r):
            arg = (t ** i) * (u ** j) * c
            if arg:
                out.append((root, arg))
        return out

    # normal form -------------------------------------------------------------

    def _insert(self, word: list[Factor], root: Root, arg: TPolynomial) -> None:
        """In place: ``word <- word * x_root(arg)`` keeping ``word`` normalized."""
        if not arg:
            return
        k = self._rank[root]
        cut = len(word)
        while cut and self._rank[word[cut - 1][0]] > k:
            cut -= 1
        tail = word[cut:]
        del word[cut:]
        if word and word[-1][0] == root:
            merged = word[-1][1] + arg
            word.pop()
            if merged:
                word.append((root, merged))
        else:
            word.append((root, arg))
        # y_1 ... y_m x_r = x_r (y_1 c_1) ... (y_m c_m), c_i = [y_i, x_r]
        pending: list[Factor] = []
        for s, u in tail:
            pending.append((s, u))
            pending.extend(self.commutator_factors(s, u, root, arg))
        for s, u in pending:
            self._insert(word, s, u)

    def normalize(self, factors: Iterable[Factor]) -> GroupWord:
        word: list[Factor] = []
        for root, arg in factors:
            if not root.is_positive:
                raise ValueError(f"root {root} is not positive")
            self._insert(word, root, arg)
        return GroupWord(tuple(word), True)

    def multiply(self, *words: GroupWord) -> GroupWord:
        factors: list[Factor] = []
        for w in words:
            factors.extend(w.factors)
        return self.normalize(factors)

    def inverse(self, word: GroupWord) -> GroupWord:
        return self.normalize((r, -p) for r, p in reversed(word.factors))

    def commutator(self, x: GroupWord, y: GroupWord) -> GroupWord:
        """``x^-1 y^-1 x y``."""
        return self.multiply(self.inverse(x), self.inverse(y), x, y)

    def identity(self) -> GroupWord:
        return GroupWord((), True)

    # reference collector -----------------------------------------------------

    def collect_naive(self, factors: Sequence[Factor], strategy: str = "left") -> GroupWord:
        """Adjacent-swap collection; ``strategy`` picks the leftmost or rightmost
        out-of-order pair.  Slow, used to cross-check ``normalize``."""
        word = [(r, p) for r, p in factors if p]
        while True:
            spots = [
                k
                for k in range(len(word) - 1)
                if self._rank[word[k][0]] >= self._rank[word[k + 1][0]]
            ]
            if not spots:
                return GroupWord(tuple(word), True)
            k = spots[0] if strategy == "left" else spots[-1]
            (s, u), (r, t) = word[k], word[k + 1]
            if s == r:
                merged = [(r, u + t)] if u + t else []
                word[k : k + 2] = merged
            else:
                word[k : k + 2] = [(r, t), (s, u)] + self.commutator_factors(s, u, r, t)


def random_word(
    rs: RootSystem,
    rng: random.Random,
    length: int,
    variables: Sequence[str] = ("t1", "t2", "t3"),
    max_coeff: int = 2,
) -> GroupWord:
    """Unnormalized word of random positive-root factors with small linear arguments."""
    factors = []
    for _ in range(length):
        root = rng.choice(rs.positive)
        arg = TPolynomial.const(rng.randint(-max_coeff, max_coeff))
        for v in variables:
            arg = arg + TPolynomial.var(v) * rng.randint(-max_coeff, max_coeff)
        factors.append((root, arg))
    return GroupWord(tuple(factors), False)


@dataclass
class Theorem6Result:
    w: int
    height: int
    expected: dict[int, dict[str, int]]
    actual: dict[int, dict[str, int]]
    low_factors: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.expected == self.actual and not self.low_factors


def theorem6_series(
    rs: RootSystem,
    table: IntTable,
    delta: str | Iterable[str],
    m: int,
    w_max: int,
    collector: Optional[Collector] = None,
) -> list[Theorem6Result]:
    """Results for ``w = 1..w_max``, reusing ``[B, _wA] = [[B, _{w-1}A], A]``."""
    if m < 1 or m + w_max > rs.max_height:
        raise HeightOverflow(f"m + w = {m + w_max} exceeds the maximal height {rs.max_height}")
    col = collector or Collector(table)
    graph = build_graph(rs, table, "pos", delta)
    k = k_matrix(graph)
    sources = [s for s in rs.positive if s.height == m]
    names = {s: f"t{j}" for j, s in enumerate(sources, start=1)}
    b = col.normalize((s, TPolynomial.var(names[s])) for s in sources)
    a = col.normalize((q, TPolynomial.const(1)) for q in rs.positive if q.height == 1 and q.label in graph.delta)
    results = []
    current = b
    for w in range(1, w_max + 1):
        current = col.commutator(current, a)
        h = m + w
        expected, actual = {}, {}
        for r in rs.positive:
            if r.height != h:
                continue
            i = graph.position(r)
            expected[rs.index[r]] = {
                names[s]: int(k[i, graph.position(s)]) for s in sources if k[i, graph.position(s)]
            }
            actual[rs.index[r]] = current.argument(r).linear_part()
        low = [rs.index[r] for r in current.roots() if r.height < h]
        results.append(Theorem6Result(w, h, expected, actual, low))
    return results


def theorem6_check(
    rs: RootSystem,
    table: IntTable,
    delta: str | Iterable[str],
    m: int,
    w: int,
) -> Theorem6Result:
    return theorem6_series(rs, table, delta, m, w)[-1]
