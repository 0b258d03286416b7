"""Sparse multivariate polynomials with integer coefficients.

A monomial is a sorted tuple of ``(variable, exponent)`` pairs, so the
variable set is open-ended (``t1, t2, ..., u, t``).
"""
from __future__ import annotations

import re
from typing import Iterator, Mapping, Union

Monomial = tuple[tuple[str, int], ...]


def _mono_mul(x: Monomial, y: Monomial) -> Monomial:
    if not x:
        return y
    if not y:
        return x
    exps = dict(x)
    for v, e in y:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _var_key(name: str) -> tuple:
    # t2 before t10
    m = re.fullmatch(r"([A-Za-z_]+)(\d*)", name)
    if m is None:
        return (name, -1)
    return (m.group(1), int(m.group(2)) if m.group(2) else -1)


class TPolynomial:
    """Immutable canonical polynomial: no zero coefficients are stored."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] = ()):
        self.terms: dict[Monomial, int] = {k: int(v) for k, v in dict(terms).items() if v}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "TPolynomial":
        return cls({(): c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "TPolynomial":
        return cls({((name, power),): 1}) if power else cls.const(1)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other: Union["TPolynomial", int]) -> "TPolynomial":
        if isinstance(other, TPolynomial):
            return other
        if isinstance(other, int):
            return TPolynomial.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "TPolynomial":
        return TPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _mono_mul(k1, k2)
                out[k] = out.get(k, 0) + v1 * v2
        return TPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TPolynomial":
        if n < 0:
            raise ValueError("negative power")
        out = TPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = TPolynomial.const(other)
        return isinstance(other, TPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms.items())

    def degree(self) -> int:
        return max((sum(e for _, e in k) for k in self.terms), default=-1)

    def linear_part(self) -> dict[str, int]:
        """Coefficients of the degree-one monomials, by variable."""
        return {k[0][0]: v for k, v in self.terms.items() if len(k) == 1 and k[0][1] == 1}

    def evaluate(self, values: Mapping[str, int]) -> int:
        total = 0
        for k, v in self.terms.items():
            term = v
            for name, e in k:
                term *= values[name] ** e
            total += term
        return total

    def _sorted_terms(self) -> list[tuple[Monomial, int]]:
        def key(item):
            mono = item[0]
            return (sum(e for _, e in mono), [(_var_key(v), -e) for v, e in mono])

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self._sorted_terms():
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in sorted(mono, key=lambda p: _var_key(p[0])))
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"TPolynomial({self})"


_VAR = r"[A-Za-z_]\w*(?:\^\d+)?"
_BODY = rf"(?:\d+(?:\s*\*\s*{_VAR})*|{_VAR}(?:\s*\*\s*{_VAR})*)"
_FULL = re.compile(rf"\s*[+-]?\s*{_BODY}(?:\s*[+-]\s*{_BODY})*\s*")
_TERM = re.compile(rf"([+-]?)\s*({_BODY})")


def parse_polynomial(text: str) -> TPolynomial:
    """Inverse of ``str``: ``"3*t1^2*t2 - t3 + 1"``."""
    if _FULL.fullmatch(text) is None:
        raise ValueError(f"cannot parse polynomial {text!r}")
    out = TPolynomial()
    for sign, body in _TERM.findall(text):
        term = TPolynomial.const(-1 if sign == "-" else 1)
        for factor in (f.strip() for f in body.split("*")):
            if factor.isdigit():
                term = term * int(factor)
            else:
                name, _, power = factor.partition("^")
                term = term * TPolynomial.var(name, int(power or 1))
        out = out + term
    return out
