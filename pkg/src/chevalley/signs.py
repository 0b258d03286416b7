"""Sign monomials and polynomials over the free signs ε, δ, γ, α.

Every symbol squares to one, so a monomial is a rational coefficient times a
*set* of symbols and multiplication is the symmetric difference of the sets.

Text grammar (used by fixtures and the CLI)::

    [-]<int>[/<int>][e<digits>][d<digits>][g<digits>][a<digits>]

``e0`` is the tenth epsilon, printed last in its block: ``-2e30d1256g3``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import MissingSymbol, MultiTerm

FAMILIES = ("epsilon", "delta", "gamma", "alpha")
FAMILY_SIZE = {"epsilon": 10, "delta": 6, "gamma": 3, "alpha": 1}
FAMILY_LETTER = {"epsilon": "e", "delta": "d", "gamma": "g", "alpha": "a"}
LETTER_FAMILY = {v: k for k, v in FAMILY_LETTER.items()}
_GREEK = {"epsilon": "ε", "delta": "δ", "gamma": "γ", "alpha": "α"}


@dataclass(frozen=True, order=True)
class SignSymbol:
    family: str
    index: int

    def __post_init__(self) -> None:
        if self.family not in FAMILY_SIZE:
            raise ValueError(f"unknown sign family {self.family!r}")
        if not 1 <= self.index <= FAMILY_SIZE[self.family]:
            raise ValueError(f"{self.family} index {self.index} out of range")

    @property
    def sort_key(self) -> tuple[int, int]:
        return FAMILIES.index(self.family), self.index

    @property
    def digit(self) -> str:
        # epsilon 10 is written as a trailing 0
        return "0" if self.index == 10 else str(self.index)

    @property
    def name(self) -> str:
        """Name used in sign-assignment files: ``e1``..``e9``, ``e0``, ``d1``, ..."""
        return FAMILY_LETTER[self.family] + self.digit

    @classmethod
    def from_name(cls, name: str) -> "SignSymbol":
        if len(name) != 2 or name[0] not in LETTER_FAMILY or not name[1].isdigit():
            raise ValueError(f"bad sign symbol name {name!r}")
        family = LETTER_FAMILY[name[0]]
        digit = int(name[1])
        if digit == 0 and family == "epsilon":
            digit = 10
        return cls(family, digit)

    def __str__(self) -> str:
        return self.name


def all_symbols() -> list[SignSymbol]:
    return [SignSymbol(f, i) for f in FAMILIES for i in range(1, FAMILY_SIZE[f] + 1)]


Symbols = frozenset  # frozenset[SignSymbol]


def _sorted(symbols: Iterable[SignSymbol]) -> list[SignSymbol]:
    return sorted(symbols, key=lambda s: s.sort_key)


def render_symbols(symbols: Iterable[SignSymbol], greek: bool = False) -> str:
    blocks = []
    by_family: dict[str, list[SignSymbol]] = {}
    for s in _sorted(symbols):
        by_family.setdefault(s.family, []).append(s)
    for family in FAMILIES:
        if family in by_family:
            head = _GREEK[family] if greek else FAMILY_LETTER[family]
            digits = "".join(s.digit for s in by_family[family])
            if greek and len(digits) > 1:
                digits = "_{" + digits + "}"
            elif greek:
                digits = "_" + digits
            blocks.append(head + digits)
    return "".join(blocks)


def _render_coeff(coeff: Fraction, bare: bool) -> str:
    """Coefficient text; ``bare`` drops a unit magnitude (symbols follow)."""
    sign = "-" if coeff < 0 else ""
    mag = abs(coeff)
    if bare and mag == 1:
        return sign
    if mag.denominator == 1:
        return f"{sign}{mag.numerator}"
    return f"{sign}{mag.numerator}/{mag.denominator}"


@dataclass(frozen=True)
class SignMonomial:
    """``coeff`` times the product of ``symbols``; the zero monomial has no symbols."""

    coeff: Fraction
    symbols: frozenset = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "symbols", frozenset(self.symbols))
        if self.coeff == 0 and self.symbols:
            object.__setattr__(self, "symbols", frozenset())

    @classmethod
    def of(cls, coeff: Union[int, Fraction] = 1, *names: str) -> "SignMonomial":
        return cls(Fraction(coeff), frozenset(SignSymbol.from_name(n) for n in names))

    @classmethod
    def parse(cls, text: str) -> "SignMonomial":
        return parse_monomial(text)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __mul__(self, other: object) -> "SignMonomial":
        if isinstance(other, SignMonomial):
            return mono_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return SignMonomial(self.coeff * other, self.symbols)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "SignMonomial":
        return SignMonomial(-self.coeff, self.symbols)

    def __truediv__(self, other: object) -> "SignMonomial":
        if isinstance(other, SignMonomial):
            return mono_mul(self, other.inverse())
        if isinstance(other, (int, Fraction)):
            return SignMonomial(self.coeff / other, self.symbols)
        return NotImplemented

    def inverse(self) -> "SignMonomial":
        if self.coeff == 0:
            raise ZeroDivisionError("zero monomial has no inverse")
        return SignMonomial(1 / self.coeff, self.symbols)

    def evaluate(self, assignment: Mapping[SignSymbol, int]) -> Fraction:
        value = self.coeff
        for s in self.symbols:
            try:
                value *= assignment[s]
            except KeyError:
                raise MissingSymbol(f"no value for sign {s.name}") from None
        return value

    def to_poly(self) -> "SignPolynomial":
        return SignPolynomial({self.symbols: self.coeff})

    def __str__(self) -> str:
        return render_monomial(self)

    def pretty(self) -> str:
        """Greek rendering, e.g. ``-2ε_{30}δ_{1256}γ_3``."""
        if self.coeff == 0:
            return "0"
        return _render_coeff(self.coeff, bool(self.symbols)) + render_symbols(self.symbols, greek=True)


ONE = SignMonomial(Fraction(1))
ZERO = SignMonomial(Fraction(0))


def mono_mul(x: SignMonomial, y: SignMonomial) -> SignMonomial:
    return SignMonomial(x.coeff * y.coeff, x.symbols ^ y.symbols)


def render_monomial(m: SignMonomial) -> str:
    if m.coeff == 0:
        return "0"
    return _render_coeff(m.coeff, bool(m.symbols)) + render_symbols(m.symbols)


_MONO = re.compile(
    r"^(?P<sign>-)?(?P<num>\d+)?(?:/(?P<den>\d+))?"
    r"(?:e(?P<e>\d+))?(?:d(?P<d>\d+))?(?:g(?P<g>\d+))?(?:a(?P<a>\d+))?$"
)


def parse_monomial(text: str) -> SignMonomial:
    text = text.strip().replace("−", "-")
    m = _MONO.match(text)
    if not text or text == "-" or m is None:
        raise ValueError(f"cannot parse sign monomial {text!r}")
    if m.group("den") and not m.group("num"):
        raise ValueError(f"cannot parse sign monomial {text!r}")
    num = int(m.group("num")) if m.group("num") else 1
    den = int(m.group("den")) if m.group("den") else 1
    coeff = Fraction(num, den) * (-1 if m.group("sign") else 1)
    symbols: set[SignSymbol] = set()
    for letter in "edga":
        digits = m.group(letter)
        if not digits:
            continue
        for ch in digits:
            s = SignSymbol.from_name(letter + ch)
            if s in symbols:
                raise ValueError(f"repeated symbol {s.name} in {text!r}")
            symbols.add(s)
    if not m.group("num") and not symbols:
        raise ValueError(f"cannot parse sign monomial {text!r}")
    return SignMonomial(coeff, frozenset(symbols))


class SignPolynomial:
    """Finite sum of sign monomials in canonical form (no zero terms)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[frozenset, Fraction] = ()):
        clean: dict[frozenset, Fraction] = {}
        for key, value in dict(terms).items():
            value = Fraction(value)
            if value:
                clean[frozenset(key)] = clean.get(frozenset(key), Fraction(0)) + value
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def from_monomials(cls, monos: Iterable[SignMonomial]) -> "SignPolynomial":
        out = cls()
        for m in monos:
            out = poly_add(out, m.to_poly())
        return out

    def __add__(self, other: "SignPolynomial") -> "SignPolynomial":
        return poly_add(self, other)

    def __neg__(self) -> "SignPolynomial":
        return SignPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SignPolynomial") -> "SignPolynomial":
        return poly_add(self, -other)

    def __mul__(self, other: Union["SignPolynomial", SignMonomial]) -> "SignPolynomial":
        if isinstance(other, SignMonomial):
            other = other.to_poly()
        out: dict[frozenset, Fraction] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 ^ k2
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return SignPolynomial(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SignMonomial):
            other = other.to_poly()
        return isinstance(other, SignPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def monomials(self) -> list[SignMonomial]:
        items = sorted(self.terms.items(), key=lambda kv: [s.sort_key for s in _sorted(kv[0])])
        return [SignMonomial(v, k) for k, v in items]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        text = " + ".join(str(m) for m in self.monomials())
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SignPolynomial({self})"


def poly_add(x: SignPolynomial, y: SignPolynomial) -> SignPolynomial:
    out = dict(x.terms)
    for k, v in y.terms.items():
        out[k] = out.get(k, Fraction(0)) + v
    return SignPolynomial(out)


def as_monomial(x: SignPolynomial) -> SignMonomial:
    if len(x.terms) > 1:
        raise MultiTerm(f"expected a single monomial, got {x}")
    if not x.terms:
        return ZERO
    ((k, v),) = x.terms.items()
    return SignMonomial(v, k)


def evaluate(x: Union[SignPolynomial, SignMonomial], assignment: Mapping[SignSymbol, int]) -> Fraction:
    if isinstance(x, SignMonomial):
        return x.evaluate(assignment)
    return sum((SignMonomial(v, k).evaluate(assignment) for k, v in x.terms.items()), Fraction(0))


def all_plus(symbols: Iterable[SignSymbol] | None = None) -> dict[SignSymbol, int]:
    return {s: 1 for s in (all_symbols() if symbols is None else symbols)}


def parse_assignment(data: Mapping[str, int]) -> dict[SignSymbol, int]:
    """Parse a ``{"e1": 1, "e0": -1, ...}`` mapping into an assignment."""
    out = {}
    for name, value in data.items():
        if value not in (1, -1):
            raise ValueError(f"sign {name} must be 1 or -1, got {value!r}")
        out[SignSymbol.from_name(name)] = int(value)
    return out
