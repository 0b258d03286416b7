"""Root graphs ``G(Φ±, Δ)``, path counts and the numbers ``K_{r,s}^Δ``.

Vertices are the 24 roots of one sign, in ordinal order.  There is an edge
``s -> s + q`` for every ``q`` in ``Δ`` with ``s + q`` a root of the same
sign, weighted by ``N_{s,q}``.  Because every edge raises the height by one,
entry ``(s, r)`` of the ``k``-th power of the adjacency (weight) matrix with
``k = ht(r) - ht(s)`` counts (weighs) all decompositions of ``r`` that start
at ``s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .constants import ConstantTable, IntTable
from .errors import EmptyDelta
from .roots import FUNDAMENTAL_NAMES, Root, RootSystem
from .signs import SignMonomial, SignSymbol

SIDES = ("pos", "neg")


def parse_delta(text: str | Iterable[str]) -> tuple[str, ...]:
    """``"a,b,c,d"`` (or an iterable of letters) -> sorted tuple of letters."""
    letters = [x.strip() for x in text.split(",")] if isinstance(text, str) else list(text)
    letters = [x for x in letters if x]
    if not letters:
        raise EmptyDelta("Δ must contain at least one fundamental root")
    bad = [x for x in letters if x not in FUNDAMENTAL_NAMES]
    if bad:
        raise ValueError(f"not fundamental roots: {', '.join(bad)}")
    return tuple(sorted(set(letters), key=FUNDAMENTAL_NAMES.index))


@dataclass(frozen=True)
class Edge:
    s: Root
    r: Root
    q: str
    weight: SignMonomial


@dataclass(frozen=True)
class RootGraph:
    rs: RootSystem
    side: str
    delta: tuple[str, ...]
    vertices: tuple[Root, ...]
    edges: tuple[Edge, ...]

    @property
    def labels(self) -> list[int]:
        return [self.rs.index[v] for v in self.vertices]

    def position(self, root: Root) -> int:
        return self.vertices.index(root)

    def adjacency(self) -> np.ndarray:
        n = len(self.vertices)
        out = np.zeros((n, n), dtype=np.int64)
        for e in self.edges:
            out[self.position(e.s), self.position(e.r)] = 1
        return out

    def weights(self, assignment: Optional[Mapping[SignSymbol, int]] = None) -> np.ndarray:
        """Weight matrix; symbol-free weights need no assignment."""
        n = len(self.vertices)
        out = np.zeros((n, n), dtype=np.int64)
        for e in self.edges:
            value = e.weight.evaluate(assignment or {})
            out[self.position(e.s), self.position(e.r)] = int(value)
        return out


def build_graph(
    rs: RootSystem,
    table: ConstantTable | IntTable,
    side: str,
    delta: str | Iterable[str],
) -> RootGraph:
    if side not in SIDES:
        raise ValueError(f"side must be 'pos' or 'neg', got {side!r}")
    delta = parse_delta(delta)
    vertices = rs.positive if side == "pos" else tuple(-r for r in rs.positive)
    edges = []
    for s in vertices:
        for name in delta:
            q = rs.fundamental[FUNDAMENTAL_NAMES.index(name)]
            r = rs.root_sum(s, q)
            if r is None or r.is_positive != s.is_positive:
                continue
            edges.append(Edge(s, r, name, _weight(table, s, q)))
    return RootGraph(rs, side, delta, tuple(vertices), tuple(edges))


def _weight(table: ConstantTable | IntTable, s: Root, q: Root) -> SignMonomial:
    if isinstance(table, IntTable):
        return SignMonomial(table.value(s, q))
    return table.entry(s, q)


def matrix_power_sum(m: np.ndarray, start: int) -> np.ndarray:
    """``sum_{k >= start} m^k`` for a nilpotent matrix, by repeated products."""
    n = m.shape[0]
    power = np.eye(n, dtype=m.dtype)
    for _ in range(start):
        power = power @ m
    total = np.zeros_like(m)
    while power.any():
        total = total + power
        power = power @ m
    return total


def path_matrix(graph: RootGraph) -> np.ndarray:
    """Entry ``(s, r)``: number of ``s``-decompositions of ``r`` of positive length."""
    return matrix_power_sum(graph.adjacency(), 1)


def path_count(graph: RootGraph, s: Root, r: Root) -> int:
    if s == r:
        return 1
    k = r.height - s.height
    if k <= 0:
        return 0
    power = np.linalg.matrix_power(graph.adjacency(), k)
    return int(power[graph.position(s), graph.position(r)])


def k_matrix(graph: RootGraph, assignment: Optional[Mapping[SignSymbol, int]] = None) -> np.ndarray:
    """``K[r, s]`` over the graph's vertices (rows ``r``, columns ``s``)."""
    return matrix_power_sum(graph.weights(assignment), 0).T


def k_number(graph: RootGraph, assignment: Optional[Mapping[SignSymbol, int]], r: Root, s: Root) -> int:
    if r == s:
        return 1
    k = r.height - s.height
    if k <= 0:
        return 0
    power = np.linalg.matrix_power(graph.weights(assignment), k)
    return int(power[graph.position(s), graph.position(r)])


def k_number_bruteforce(
    rs: RootSystem,
    table: IntTable,
    delta: str | Iterable[str],
    r: Root,
    s: Root,
) -> int:
    """Sum over all ``Δ``-decompositions ``r = s + q1 + ... + qt`` by depth-first search."""
    delta = parse_delta(delta)
    steps = [rs.fundamental[FUNDAMENTAL_NAMES.index(x)] for x in delta]
    if r == s:
        return 1

    def walk(current: Root) -> int:
        if current == r:
            return 1
        total = 0
        for q in steps:
            nxt = rs.root_sum(current, q)
            if nxt is None or nxt.height > r.height:
                continue
            total += table.value(current, q) * walk(nxt)
        return total

    return walk(s) if r.height > s.height else 0


@dataclass
class Theorem5Report:
    checked: int
    violations: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations


def theorem5_check(rs: RootSystem, table: IntTable, delta: str | Iterable[str]) -> Theorem5Report:
    """``K_{r,s} = (-1)^{ht r - ht s} (r,r)/(s,s) K_{-s,-r}`` for all positive ``r, s``."""
    pos = k_matrix(build_graph(rs, table, "pos", delta))
    neg = k_matrix(build_graph(rs, table, "neg", delta))
    violations = []
    roots = rs.positive
    for i, r in enumerate(roots):
        for j, s in enumerate(roots):
            sign = (-1) ** abs(r.height - s.height)
            rhs = sign * Fraction(r.norm) / Fraction(s.norm) * int(neg[j, i])
            if int(pos[i, j]) != rhs:
                violations.append((rs.index[r], rs.index[s]))
    return Theorem5Report(len(roots) ** 2, violations)


def to_dot(graph: RootGraph, assignment: Optional[Mapping[SignSymbol, int]] = None) -> str:
    """Graphviz text; edge labels are the fundamental letter and the weight."""
    name = f"G_{graph.side}_{''.join(graph.delta)}"
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for v in graph.vertices:
        lines.append(f'  "{graph.rs.index[v]}" [label="{graph.rs.index[v]}\\n{v.label}"];')
    for e in graph.edges:
        w = e.weight
        text = str(w.evaluate(assignment)) if assignment is not None else str(w)
        lines.append(f'  "{graph.rs.index[e.s]}" -> "{graph.rs.index[e.r]}" [label="{e.q}, {text}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrix_rows(labels: Sequence[int], matrix: np.ndarray, corner: str) -> list[list[str]]:
    """CSV rows with signed-ordinal headers, matching the fixture layout."""
    rows = [[corner] + [str(x) for x in labels]]
    for lab, row in zip(labels, matrix):
        rows.append([str(lab)] + [str(int(v)) for v in row])
    return rows
