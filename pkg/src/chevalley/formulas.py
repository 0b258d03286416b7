"""Chevalley commutator formulas ``[x_s(u), x_r(t)]`` for F4.

With ``[x, y] = x^-1 y^-1 x y`` the commutator is

    prod over i, j > 0 with ir+js a root, by increasing i+j, of
    x_{ir+js}(C_{ij,rs} (-t)^i u^j)

and ``C_{ij,rs}`` is built from the structure constants through the
auxiliary numbers ``M_{r,s,i} = N_{r,s} N_{r,r+s} ... N_{r,(i-1)r+s} / i!``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping, Optional

from .constants import ConstantTable
from .errors import NonIntegral, OppositeRoots, UndefinedFactor, UnsupportedPair
from .roots import Root, RootSystem, order_less
from .signs import ONE, SignMonomial, SignSymbol

SUPPORTED = ((1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (2, 3))
SECTIONS = ("positive", "negative", "mixed")


def _multiple(rs: RootSystem, r: Root, s: Root, i: int, j: int) -> Optional[Root]:
    return rs.by_coeffs([i * x + j * y for x, y in zip(r.coeffs, s.coeffs)])


def m_coeff(table: ConstantTable, r: Root, s: Root, i: int) -> SignMonomial:
    """``M_{r,s,i}``; every partial sum ``kr + s`` (``k <= i``) must be a root."""
    rs = table.rs
    value = ONE
    current = s
    for k in range(i):
        nxt = rs.root_sum(r, current)
        if nxt is None:
            raise UndefinedFactor(f"{k + 1}*({r}) + ({s}) is not a root")
        value = value * table.entry(r, current)
        current = nxt
    return value / factorial(i)


def c_coeff(table: ConstantTable, i: int, j: int, r: Root, s: Root) -> SignMonomial:
    """``C_{ij,rs}``, checked to be an integer multiple of a sign product."""
    rs = table.rs
    if (i, j) not in SUPPORTED or _multiple(rs, r, s, i, j) is None:
        raise UnsupportedPair(f"no coefficient C_{i}{j} for r={r}, s={s}")
    if j == 1:
        value = m_coeff(table, r, s, i)
    elif i == 1:
        value = m_coeff(table, s, r, j) * (-1) ** j
    elif (i, j) == (3, 2):
        value = m_coeff(table, rs.root_sum(r, s), r, 2) * Fraction(1, 3)
    else:
        value = m_coeff(table, rs.root_sum(s, r), s, 2) * Fraction(-2, 3)
    if value.coeff.denominator != 1:
        raise NonIntegral(f"C_{i}{j} for r={r}, s={s} is {value}")
    return value


@dataclass(frozen=True)
class Term:
    """Factor ``x_root(coeff * (-t)^i * u^j)``."""

    i: int
    j: int
    root: Root
    coeff: SignMonomial

    @property
    def argument(self) -> SignMonomial:
        """Coefficient of ``t^i u^j`` in the factor's argument."""
        return self.coeff * (-1) ** self.i

    def render(self, greek: bool = False) -> str:
        return f"x_{{{self.root.label}}}({_argument_text(self.argument, self.i, self.j, greek)})"


def _power(var: str, k: int) -> str:
    return var if k == 1 else f"{var}^{k}"


def _argument_text(coeff: SignMonomial, i: int, j: int, greek: bool) -> str:
    mono = _power("t", i) + _power("u", j)
    if not coeff.symbols:
        c = coeff.coeff
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}{mono}"
    return (coeff.pretty() if greek else str(coeff)) + " " + mono


@dataclass(frozen=True)
class CommutatorFormula:
    s: Root
    r: Root
    terms: tuple[Term, ...]

    def specialized(self, assignment: Mapping[SignSymbol, int]) -> "CommutatorFormula":
        terms = tuple(
            Term(t.i, t.j, t.root, SignMonomial(t.coeff.evaluate(assignment))) for t in self.terms
        )
        return CommutatorFormula(self.s, self.r, terms)

    @property
    def lhs(self) -> str:
        return f"[x_{{{self.s.label}}}(u),x_{{{self.r.label}}}(t)]"

    def rhs(self, greek: bool = False) -> str:
        if not self.terms:
            return "1"
        return " ".join(t.render(greek) for t in self.terms)

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs()}"

    def to_json(self) -> dict:
        return {
            "s": self.s.label,
            "r": self.r.label,
            "terms": [
                {"i": t.i, "j": t.j, "root": t.root.label, "coeff": str(t.coeff), "argument": str(t.argument)}
                for t in self.terms
            ],
        }


def formula(table: ConstantTable, s: Root, r: Root) -> CommutatorFormula:
    """Expansion of ``[x_s(u), x_r(t)]``; empty when ``r + s`` is not a root."""
    rs = table.rs
    if r == -s:
        raise OppositeRoots(f"[x_{s}, x_{r}] involves opposite roots")
    if rs.root_sum(r, s) is None:
        return CommutatorFormula(s, r, ())
    terms = []
    for i, j in sorted(SUPPORTED, key=lambda p: (p[0] + p[1], -p[0])):
        root = _multiple(rs, r, s, i, j)
        if root is not None:
            terms.append(Term(i, j, root, c_coeff(table, i, j, r, s)))
    return CommutatorFormula(s, r, tuple(terms))


def catalog_pairs(rs: RootSystem) -> dict[str, list[tuple[Root, Root]]]:
    """Pairs ``(s, r)`` listed in each catalog section, in catalog order.

    positive: ``0 < s < r``; negative: ``(-s', -r')`` for each positive pair;
    mixed: ``s`` positive and ``r = -r'`` with ``s < r'``.
    """
    pos = [(s, r) for s in rs.positive for r in rs.positive if order_less(s, r) and rs.root_sum(s, r)]
    neg = [(-s, -r) for s, r in pos]
    mixed = [
        (s, -r) for s in rs.positive for r in rs.positive if order_less(s, r) and rs.root_sum(s, -r)
    ]
    return {"positive": pos, "negative": neg, "mixed": mixed}


def catalog(table: ConstantTable) -> dict[str, list[CommutatorFormula]]:
    return {name: [formula(table, s, r) for s, r in pairs] for name, pairs in catalog_pairs(table.rs).items()}


def render_formula_catalog(
    table: ConstantTable,
    assignment: Optional[Mapping[SignSymbol, int]] = None,
    greek: bool = False,
) -> str:
    """Numbered plain-text catalog, one formula per line."""
    lines = []
    for name, formulas in catalog(table).items():
        lines.append(f"# {name}")
        width = 2 if name != "mixed" else 3
        for n, f in enumerate(formulas, start=1):
            if assignment is not None:
                f = f.specialized(assignment)
            lines.append(f"({n:0{width}d}) {f.lhs} = {f.rhs(greek)}")
    return "\n".join(lines) + "\n"


def catalog_json(table: ConstantTable, assignment: Optional[Mapping[SignSymbol, int]] = None) -> dict:
    out = {}
    for name, formulas in catalog(table).items():
        rows = []
        for n, f in enumerate(formulas, start=1):
            if assignment is not None:
                f = f.specialized(assignment)
            rows.append({"number": n, **f.to_json()})
        out[name] = rows
    return out
