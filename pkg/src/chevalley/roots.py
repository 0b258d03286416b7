"""The F4 root system: fundamental basis, order, heights and root chains.

Roots are stored by their coefficients over the fundamental roots
``a, b, c, d``; Euclidean coordinates in the orthonormal basis ``e1..e4`` are
derived data, kept as exact fractions and validated when the system is built.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Optional, Sequence

from .errors import InconsistencyError

Coeffs = tuple[int, ...]
Vector = tuple[Fraction, ...]

FUNDAMENTAL_NAMES = ("a", "b", "c", "d")

# Fundamental roots a, b, c, d in the e-basis.
_HALF = Fraction(1, 2)
F4_FUNDAMENTAL_EUCLID: tuple[Vector, ...] = (
    (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    (_HALF, -_HALF, -_HALF, -_HALF),
)


@dataclass(frozen=True)
class Root:
    """A root given by its coefficients over the fundamental roots.

    Equality and hashing use ``coeffs`` only.
    """

    coeffs: Coeffs
    euclid: Vector = field(compare=False, repr=False)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    @cached_property
    def norm(self) -> Fraction:
        """Squared length ``(r, r)``."""
        return dot(self.euclid, self.euclid)

    def __neg__(self) -> "Root":
        return Root(tuple(-x for x in self.coeffs), tuple(-x for x in self.euclid))

    @property
    def quad(self) -> str:
        """Compact coefficient string, e.g. ``'1232'`` or ``'-0121'``."""
        sign = "-" if self.height < 0 else ""
        return sign + "".join(str(abs(x)) for x in self.coeffs)

    @property
    def label(self) -> str:
        """Linear combination of fundamental roots, e.g. ``'a+2b+3c+2d'``."""
        parts = []
        for name, k in zip(FUNDAMENTAL_NAMES, self.coeffs):
            if k == 0:
                continue
            mag = abs(k)
            term = name if mag == 1 else f"{mag}{name}"
            parts.append(("-" if k < 0 else "+") + term)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    @property
    def euclid_label(self) -> str:
        """Coordinates written in the e-basis, e.g. ``'(e1-e2-e3-e4)/2'``."""
        halves = any(x.denominator == 2 for x in self.euclid)
        scale = 2 if halves else 1
        parts = []
        for i, x in enumerate(self.euclid, start=1):
            k = int(x * scale)
            if k == 0:
                continue
            mag = "" if abs(k) == 1 else str(abs(k))
            parts.append(("-" if k < 0 else "+") + f"{mag}e{i}")
        text = "".join(parts)
        if text.startswith("+"):
            text = text[1:]
        return f"({text})/2" if halves else text

    def __str__(self) -> str:
        return self.label


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((p * q for p, q in zip(x, y)), Fraction(0))


def order_less(x: Root, y: Root) -> bool:
    """True iff the first nonzero coefficient of ``y - x`` is positive."""
    for p, q in zip(x.coeffs, y.coeffs):
        if p != q:
            return q > p
    return False


def height(r: Root) -> int:
    return r.height


def inner(r: Root, s: Root) -> Fraction:
    return dot(r.euclid, s.euclid)


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise InconsistencyError("fundamental roots are linearly dependent")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def _f4_vectors() -> list[Vector]:
    """All 48 F4 roots in the e-basis: ±e_i, ±e_i±e_j, (±e1±e2±e3±e4)/2."""
    zero, one = Fraction(0), Fraction(1)
    out: list[Vector] = []
    for i in range(4):
        for sign in (one, -one):
            v = [zero] * 4
            v[i] = sign
            out.append(tuple(v))
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product((one, -one), repeat=2):
            v = [zero] * 4
            v[i], v[j] = si, sj
            out.append(tuple(v))
    for signs in itertools.product((_HALF, -_HALF), repeat=4):
        out.append(tuple(signs))
    return out


_ROOT_TEXT = re.compile(r"^-?\d{4}$")
_LABEL_TERM = re.compile(r"([+-]?)(\d*)([abcd])")


class RootSystem:
    """Immutable F4 root system with Table-style numbering.

    Positive roots are numbered 1..24 in ascending ``≺`` order; the negative
    of root ``k`` is numbered ``-k``.
    """

    rank = 4

    def __init__(self, fundamental_euclid: Sequence[Vector], vectors: Sequence[Vector]):
        basis = [list(v) for v in fundamental_euclid]
        transposed = [[basis[j][i] for j in range(self.rank)] for i in range(self.rank)]
        roots = []
        for v in vectors:
            coeffs = _solve(transposed, list(v))
            if any(c.denominator != 1 for c in coeffs):
                raise InconsistencyError(f"vector {v} is not an integral combination")
            ints = tuple(int(c) for c in coeffs)
            if not (all(c >= 0 for c in ints) or all(c <= 0 for c in ints)):
                raise InconsistencyError(f"root {ints} has mixed-sign coefficients")
            roots.append(Root(ints, tuple(v)))

        self.positive: tuple[Root, ...] = tuple(
            sorted((r for r in roots if r.is_positive), key=lambda r: r.coeffs)
        )
        self.all: tuple[Root, ...] = tuple(sorted(roots, key=lambda r: r.coeffs))
        self._by_coeffs = {r.coeffs: r for r in roots}
        self.fundamental: tuple[Root, ...] = tuple(
            self._by_coeffs[tuple(int(i == k) for i in range(self.rank))] for k in range(self.rank)
        )
        self.index: dict[Root, int] = {}
        for k, r in enumerate(self.positive, start=1):
            self.index[r] = k
            self.index[-r] = -k
        self.sums: dict[tuple[Root, Root], Root] = {}
        for r in self.all:
            for s in self.all:
                t = self._by_coeffs.get(tuple(p + q for p, q in zip(r.coeffs, s.coeffs)))
                if t is not None:
                    self.sums[(r, s)] = t
        self._check()

    def _check(self) -> None:
        if len(self.positive) != 24 or len(self.all) != 48:
            raise InconsistencyError("F4 must have 24 positive and 48 roots in total")
        for r in self.all:
            if -r not in self._by_coeffs.values():
                raise InconsistencyError(f"{r.quad} has no negative")
            if r.norm not in (1, 2):
                raise InconsistencyError(f"{r.quad} has squared length {r.norm}")
            expect = tuple(
                sum((k * f.euclid[i] for k, f in zip(r.coeffs, self.fundamental)), Fraction(0))
                for i in range(self.rank)
            )
            if expect != r.euclid:
                raise InconsistencyError(f"{r.quad} embedding mismatch")

    # lookups -----------------------------------------------------------------

    def by_coeffs(self, coeffs: Sequence[int]) -> Optional[Root]:
        return self._by_coeffs.get(tuple(coeffs))

    def __contains__(self, coeffs: object) -> bool:
        if isinstance(coeffs, Root):
            coeffs = coeffs.coeffs
        return tuple(coeffs) in self._by_coeffs  # type: ignore[arg-type]

    def __iter__(self) -> Iterator[Root]:
        return iter(self.all)

    def __len__(self) -> int:
        return len(self.all)

    def root(self, ordinal: int) -> Root:
        """Root with signed ordinal ``±1..±24``."""
        if ordinal == 0 or abs(ordinal) > len(self.positive):
            raise KeyError(f"no root numbered {ordinal}")
        r = self.positive[abs(ordinal) - 1]
        return r if ordinal > 0 else -r

    def parse(self, text: str) -> Root:
        """Accept a signed ordinal (``-9``), a quadruple (``1232``, ``-0121``)
        or a label (``a+2b+3c+2d``, ``-b-c``)."""
        text = text.strip()
        if _ROOT_TEXT.match(text):
            sign = -1 if text.startswith("-") else 1
            digits = text.lstrip("-")
            r = self.by_coeffs([sign * int(ch) for ch in digits])
        elif re.fullmatch(r"-?\d+", text):
            return self.root(int(text))
        else:
            coeffs = [0, 0, 0, 0]
            pos = 0
            for m in _LABEL_TERM.finditer(text):
                if m.start() != pos:
                    raise KeyError(f"cannot parse root {text!r}")
                k = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
                coeffs[FUNDAMENTAL_NAMES.index(m.group(3))] += k
                pos = m.end()
            r = self.by_coeffs(coeffs) if pos == len(text) and pos else None
        if r is None:
            raise KeyError(f"{text!r} is not a root")
        return r

    # arithmetic --------------------------------------------------------------

    def root_sum(self, r: Root, s: Root) -> Optional[Root]:
        """``r + s`` when it is a root, otherwise ``None``."""
        return self.sums.get((r, s))

    def is_root(self, coeffs: Sequence[int]) -> bool:
        return tuple(coeffs) in self._by_coeffs

    def chain_p(self, r: Root, s: Root) -> int:
        """Largest ``p >= 0`` with ``s - p*r`` a root."""
        p = 0
        while self.is_root(tuple(y - (p + 1) * x for x, y in zip(r.coeffs, s.coeffs))):
            p += 1
        return p

    def chain_q(self, r: Root, s: Root) -> int:
        """Largest ``q >= 0`` with ``s + q*r`` a root."""
        q = 0
        while self.is_root(tuple(y + (q + 1) * x for x, y in zip(r.coeffs, s.coeffs))):
            q += 1
        return q

    def cartan_integer(self, r: Root, s: Root) -> int:
        """``2 (r, s) / (s, s)``."""
        value = 2 * inner(r, s) / s.norm
        if value.denominator != 1:
            raise InconsistencyError(f"non-integral Cartan integer for {r.quad}, {s.quad}")
        return int(value)

    def coroot_coeffs(self, r: Root) -> tuple[int, ...]:
        """Coefficients of the coroot ``2r/(r,r)`` over the fundamental coroots."""
        out = []
        for k, f in zip(r.coeffs, self.fundamental):
            value = k * f.norm / r.norm
            if value.denominator != 1:
                raise InconsistencyError(f"non-integral coroot for {r.quad}")
            out.append(int(value))
        return tuple(out)

    def roots_of_height(self, h: int) -> list[Root]:
        return [r for r in self.all if r.height == h]

    @property
    def max_height(self) -> int:
        return max(r.height for r in self.positive)


@lru_cache(maxsize=None)
def build_f4() -> RootSystem:
    """The F4 root system with the standard ``a, b, c, d`` fundamental roots."""
    return RootSystem(F4_FUNDAMENTAL_EUCLID, _f4_vectors())
