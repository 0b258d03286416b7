"""Structure constants ``N_{r,s}`` of the F4 Lie algebra.

The constants of extraspecial pairs are free signs (times the forced
magnitude ``p + 1``).  Every other constant is obtained by fixpoint
propagation through the four classical relations:

(i)   ``N_{s,r} = -N_{r,s}``;
(ii)  ``N_{r1,r2}/(r3,r3) = N_{r2,r3}/(r1,r1) = N_{r3,r1}/(r2,r2)`` when ``r1+r2+r3 = 0``;
(iii) ``N_{r,s} N_{-r,-s} = -(p+1)^2``;
(iv)  ``sum_cyclic N_{r1,r2} N_{r3,r4} / (r1+r2, r1+r2) = 0`` when ``r1+r2+r3+r4 = 0``
      and no two of the four roots are opposite.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import Incomplete, InconsistencyError, MissingSymbol
from .roots import FUNDAMENTAL_NAMES, Root, RootSystem, order_less
from .signs import (
    ZERO,
    SignMonomial,
    SignPolynomial,
    SignSymbol,
    as_monomial,
)

# Free-sign family attached to the first root of an extraspecial pair.
_FAMILY_OF_FIRST = {"d": "epsilon", "c": "delta", "b": "gamma", "a": "alpha"}

Pair = tuple[Root, Root]


@dataclass(frozen=True)
class ExtraspecialChoice:
    pairs: tuple[Pair, ...]
    values: Mapping[Pair, SignMonomial]

    @property
    def symbols(self) -> list[SignSymbol]:
        out = []
        for pair in self.pairs:
            out.extend(sorted(self.values[pair].symbols))
        return out

    def specialized(self, assignment: Mapping[SignSymbol, int]) -> "ExtraspecialChoice":
        """Same pairs with every sign replaced by its value (symbol-free)."""
        values = {p: SignMonomial(v.evaluate(assignment)) for p, v in self.values.items()}
        return ExtraspecialChoice(self.pairs, values)


def special_pairs(rs: RootSystem) -> dict[Root, list[Pair]]:
    """Special pairs ``0 ≺ r ≺ s`` with ``r + s`` a root, grouped by the sum."""
    out: dict[Root, list[Pair]] = {}
    for r in rs.positive:
        for s in rs.positive:
            t = rs.root_sum(r, s)
            if t is not None and order_less(r, s):
                out.setdefault(t, []).append((r, s))
    return out


def find_extraspecial(rs: RootSystem) -> ExtraspecialChoice:
    """Extraspecial pairs with values ``(p+1)·sign``, one fresh sign per pair.

    The sign family follows the first root (``d``→ε, ``c``→δ, ``b``→γ,
    ``a``→α); indices run in ``≺`` order of the second root.
    """
    by_sum = special_pairs(rs)
    pairs = []
    for t in rs.positive:
        if t in by_sum:
            pairs.append(min(by_sum[t], key=lambda p: p[0].coeffs))
    counters: dict[str, int] = {}
    values = {}
    for r, s in sorted(pairs, key=lambda p: (p[0].coeffs, p[1].coeffs)):
        if r not in rs.fundamental:
            raise InconsistencyError(f"extraspecial pair ({r}, {s}) starts at a non-fundamental root")
        family = _FAMILY_OF_FIRST[FUNDAMENTAL_NAMES[rs.fundamental.index(r)]]
        counters[family] = counters.get(family, 0) + 1
        symbol = SignSymbol(family, counters[family])
        values[(r, s)] = SignMonomial(rs.chain_p(r, s) + 1, frozenset([symbol]))
    ordered = tuple(sorted(values, key=lambda p: (p[0].coeffs, p[1].coeffs)))
    return ExtraspecialChoice(ordered, values)


@lru_cache(maxsize=None)
def zero_sum_quadruples(rs: RootSystem) -> tuple[tuple[Root, Root, Root, Root], ...]:
    """Ordered ``(r1, r2, r3, r4)`` with zero sum and no opposite pair."""
    out = []
    allr = rs.all
    for r1 in allr:
        for r2 in allr:
            if r1.coeffs == tuple(-x for x in r2.coeffs):
                continue
            for r3 in allr:
                c4 = tuple(-(x + y + z) for x, y, z in zip(r1.coeffs, r2.coeffs, r3.coeffs))
                r4 = rs.by_coeffs(c4)
                if r4 is None:
                    continue
                quad = (r1, r2, r3, r4)
                if any(
                    quad[i].coeffs == tuple(-x for x in quad[j].coeffs)
                    for i in range(4)
                    for j in range(i + 1, 4)
                ):
                    continue
                out.append(quad)
    return tuple(out)


@lru_cache(maxsize=None)
def zero_sum_triples(rs: RootSystem) -> tuple[tuple[Root, Root, Root], ...]:
    out = []
    for r1 in rs.all:
        for r2 in rs.all:
            r12 = rs.root_sum(r1, r2)
            if r12 is not None:
                out.append((r1, r2, -r12))
    return tuple(out)


class ConstantTable:
    """Total map ``(r, s) -> N_{r,s}`` over pairs with ``r + s`` a root."""

    def __init__(self, rs: RootSystem, entries: Mapping[Pair, SignMonomial]):
        self.rs = rs
        self.entries: dict[Pair, SignMonomial] = dict(entries)

    def entry(self, r: Root, s: Root) -> SignMonomial:
        """``N_{r,s}``; the zero monomial when ``r + s`` is not a root."""
        return self.entries.get((r, s), ZERO)

    def __getitem__(self, pair: Pair) -> SignMonomial:
        return self.entry(*pair)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ConstantTable) and self.entries == other.entries

    @property
    def symbols(self) -> set[SignSymbol]:
        out: set[SignSymbol] = set()
        for v in self.entries.values():
            out |= v.symbols
        return out

    def specialize(self, assignment: Mapping[SignSymbol, int]) -> "IntTable":
        values = {}
        for pair, v in self.entries.items():
            x = v.evaluate(assignment)
            if x.denominator != 1:
                raise InconsistencyError(f"non-integral constant {v} at {pair}")
            values[pair] = int(x)
        return IntTable(self.rs, values, dict(assignment))


class IntTable:
    """Integer structure constants for one sign assignment."""

    def __init__(self, rs: RootSystem, values: Mapping[Pair, int], assignment: Optional[dict] = None):
        self.rs = rs
        self.values: dict[Pair, int] = dict(values)
        self.assignment = assignment
        self.position = {r: i for i, r in enumerate(rs.all)}

    def __getitem__(self, pair: Pair) -> int:
        return self.values.get(pair, 0)

    def value(self, r: Root, s: Root) -> int:
        return self.values.get((r, s), 0)

    def by_ordinal(self, i: int, j: int) -> int:
        return self.value(self.rs.root(i), self.rs.root(j))

    def matrix(self) -> np.ndarray:
        """48×48 array in ``rs.all`` order; zero where ``r + s`` is not a root."""
        n = len(self.rs.all)
        out = np.zeros((n, n), dtype=np.int64)
        for (r, s), v in self.values.items():
            out[self.position[r], self.position[s]] = v
        return out

    def as_constant_table(self) -> ConstantTable:
        """The same values as symbol-free monomials."""
        return ConstantTable(self.rs, {p: SignMonomial(v) for p, v in self.values.items()})

    def with_value(self, pair: Pair, value: int) -> "IntTable":
        values = dict(self.values)
        values[pair] = value
        return IntTable(self.rs, values, self.assignment)


def specialize(table: ConstantTable, assignment: Mapping[SignSymbol, int]) -> IntTable:
    return table.specialize(assignment)


@dataclass
class _Propagator:
    rs: RootSystem
    known: dict = field(default_factory=dict)
    queue: deque = field(default_factory=deque)

    def assign(self, r: Root, s: Root, value: SignMonomial) -> None:
        old = self.known.get((r, s))
        if old is not None:
            if old != value:
                raise InconsistencyError(f"N({r}, {s}) derived as both {old} and {value}")
            return
        if value.is_zero():
            raise InconsistencyError(f"N({r}, {s}) derived as zero")
        if abs(value.coeff) != self.rs.chain_p(r, s) + 1:
            raise InconsistencyError(f"N({r}, {s}) derived as {value}, magnitude must be p+1")
        self.known[(r, s)] = value
        self.queue.append((r, s))

    def close(self) -> None:
        """Apply (i), (ii), (iii) until the queue drains."""
        rs = self.rs
        while self.queue:
            r, s = self.queue.popleft()
            v = self.known[(r, s)]
            self.assign(s, r, -v)
            p = rs.chain_p(r, s)
            self.assign(-r, -s, SignMonomial(-((p + 1) ** 2)) / v)
            t = -rs.root_sum(r, s)
            # (r, s, t) is a zero-sum triple: rotate it
            self.assign(s, t, v * (r.norm / t.norm))
            self.assign(t, r, v * (s.norm / t.norm))

    def quad_step(self, quad: tuple[Root, Root, Root, Root]) -> bool:
        """Solve one unknown from relation (iv) if the quadruple isolates it."""
        r1, r2, r3, r4 = quad
        rs = self.rs
        terms = []
        for (x, y), (z, w) in (((r1, r2), (r3, r4)), ((r2, r3), (r1, r4)), ((r3, r1), (r2, r4))):
            xy = rs.root_sum(x, y)
            if xy is None:
                continue
            terms.append(((x, y), (z, w), xy.norm))
        unknown_terms = []
        known_sum = SignPolynomial()
        for f1, f2, norm in terms:
            missing = [f for f in (f1, f2) if f not in self.known]
            if missing:
                unknown_terms.append((f1, f2, norm, missing))
            else:
                known_sum = known_sum + (self.known[f1] * self.known[f2] / norm).to_poly()
        if len(unknown_terms) != 1 or len(unknown_terms[0][3]) != 1:
            return False
        f1, f2, norm, (target,) = unknown_terms[0]
        other = f2 if target == f1 else f1
        value = as_monomial(-known_sum) * norm / self.known[other]
        self.assign(*target, value)
        return True


def solve_constants(rs: RootSystem, choice: ExtraspecialChoice) -> ConstantTable:
    """All ``N_{r,s}`` as sign monomials, derived from the extraspecial choice."""
    prop = _Propagator(rs)
    for (r, s) in choice.pairs:
        prop.assign(r, s, choice.values[(r, s)])
    quads = _solver_quadruples(rs)
    total = len(rs.sums)
    while True:
        prop.close()
        if len(prop.known) == total:
            break
        progress = False
        for quad in quads:
            if prop.quad_step(quad):
                prop.close()
                progress = True
        if not progress:
            raise Incomplete(f"propagation stalled with {len(prop.known)} of {total} constants")
    return ConstantTable(rs, prop.known)


@lru_cache(maxsize=None)
def _solver_quadruples(rs: RootSystem) -> tuple:
    """One representative per relation: ``r1, r2, r3`` up to permutation.

    Ordered by height of the pair sum the relation would first touch, then
    by ``≺``, so propagation is deterministic and works bottom-up.
    """
    seen = set()
    out = []
    for quad in zero_sum_quadruples(rs):
        key = (tuple(sorted(q.coeffs for q in quad[:3])), quad[3].coeffs)
        if key in seen:
            continue
        seen.add(key)
        head = sorted(quad[:3], key=lambda q: q.coeffs)
        out.append((head[0], head[1], head[2], quad[3]))
    out.sort(key=lambda q: (max(abs(x.height) for x in q), [x.coeffs for x in q]))
    return tuple(out)


@lru_cache(maxsize=None)
def f4_symbolic_table() -> ConstantTable:
    """Symbolic F4 table for the standard extraspecial choice (cached)."""
    from .roots import build_f4

    rs = build_f4()
    return solve_constants(rs, find_extraspecial(rs))


def random_assignment(symbols: Iterable[SignSymbol], rng: random.Random) -> dict[SignSymbol, int]:
    return {s: rng.choice((1, -1)) for s in sorted(symbols, key=lambda s: s.sort_key)}


def require_total(assignment: Mapping[SignSymbol, int], symbols: Iterable[SignSymbol]) -> None:
    missing = sorted((s for s in symbols if s not in assignment), key=lambda s: s.sort_key)
    if missing:
        raise MissingSymbol("assignment lacks " + ", ".join(s.name for s in missing))
