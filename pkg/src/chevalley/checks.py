"""Independent consistency checks for integer structure-constant tables.

``verify_relations`` re-checks relations (i)-(iv) exhaustively.
``jacobi_oracle`` builds the 52-dimensional Chevalley basis and checks the
Jacobi identity on every basis triple; it shares nothing with the solver
except the root system.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .constants import IntTable, zero_sum_quadruples, zero_sum_triples
from .roots import RootSystem


@dataclass
class RelationReport:
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[tuple[str, tuple[str, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        parts = [f"{name}: {n} checked" for name, n in self.checked.items()]
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return "; ".join(parts) + f" -> {status}"


@dataclass(frozen=True)
class _Index:
    """Positions (in ``rs.all`` order) of every object the relations touch."""

    pairs: np.ndarray          # (P, 2) pairs with r + s a root
    pair_neg: np.ndarray       # (P, 2) their negatives
    pair_bound: np.ndarray     # (P,) (p + 1)^2
    triples: np.ndarray        # (T, 3) zero-sum triples
    quads: np.ndarray          # (Q, 4) zero-sum quadruples, no opposite pair
    norms: np.ndarray          # (48,) squared lengths
    sum_norm: np.ndarray       # (48, 48) (r+s, r+s), 1 where r+s is not a root
    negate: np.ndarray         # (48,) position of -r


@lru_cache(maxsize=None)
def _index(rs: RootSystem) -> _Index:
    pos = {r: i for i, r in enumerate(rs.all)}
    n = len(rs.all)
    pairs, neg, bound = [], [], []
    sum_norm = np.ones((n, n), dtype=np.int64)
    for (r, s), t in rs.sums.items():
        pairs.append((pos[r], pos[s]))
        neg.append((pos[-r], pos[-s]))
        bound.append((rs.chain_p(r, s) + 1) ** 2)
        sum_norm[pos[r], pos[s]] = int(t.norm)
    triples = [(pos[a], pos[b], pos[c]) for a, b, c in zero_sum_triples(rs)]
    quads = [tuple(pos[x] for x in q) for q in zero_sum_quadruples(rs)]
    return _Index(
        pairs=np.array(pairs),
        pair_neg=np.array(neg),
        pair_bound=np.array(bound),
        triples=np.array(triples),
        quads=np.array(quads),
        norms=np.array([int(r.norm) for r in rs.all]),
        sum_norm=sum_norm,
        negate=np.array([pos[-r] for r in rs.all]),
    )


def verify_relations(table: IntTable) -> RelationReport:
    """Check (i)-(iv) on all pairs, zero-sum triples and admissible quadruples."""
    rs = table.rs
    ix = _index(rs)
    m = table.matrix()
    names = [r.label for r in rs.all]
    report = RelationReport()

    def flag(rel: str, bad: np.ndarray, rows: np.ndarray) -> None:
        for k in np.flatnonzero(bad):
            report.violations.append((rel, tuple(names[i] for i in rows[k])))

    # (i) antisymmetry, and no value where r + s is not a root
    i, j = ix.pairs[:, 0], ix.pairs[:, 1]
    report.checked["i"] = len(ix.pairs)
    flag("i", m[i, j] != -m[j, i], ix.pairs)
    support = np.zeros_like(m, dtype=bool)
    support[i, j] = True
    stray = np.argwhere((m != 0) & ~support)
    for a, b in stray:
        report.violations.append(("support", (names[a], names[b])))

    # (ii) rotation of zero-sum triples, cross-multiplied to stay integral
    a, b, c = ix.triples.T
    n = ix.norms
    report.checked["ii"] = len(ix.triples)
    flag("ii", (m[a, b] * n[a] != m[b, c] * n[c]) | (m[a, b] * n[b] != m[c, a] * n[c]), ix.triples)

    # (iii) N_{r,s} N_{-r,-s} = -(p+1)^2
    ni, nj = ix.pair_neg[:, 0], ix.pair_neg[:, 1]
    report.checked["iii"] = len(ix.pairs)
    flag("iii", m[i, j] * m[ni, nj] != -ix.pair_bound, ix.pairs)

    # (iv) three-term identity, scaled by 2 so every term is an integer
    r1, r2, r3, r4 = ix.quads.T
    sn = ix.sum_norm
    total = (
        m[r1, r2] * m[r3, r4] * (2 // sn[r1, r2])
        + m[r2, r3] * m[r1, r4] * (2 // sn[r2, r3])
        + m[r3, r1] * m[r2, r4] * (2 // sn[r3, r1])
    )
    report.checked["iv"] = len(ix.quads)
    flag("iv", total != 0, ix.quads)
    return report


def structure_tensor(table: IntTable) -> np.ndarray:
    """Bracket coefficients ``C[i, j, k]`` of ``[x_i, x_j]`` on ``x_k``.

    Basis: ``e_r`` for ``r`` in ``rs.all`` order, then the fundamental
    coroots ``h_a, h_b, h_c, h_d``.
    """
    rs = table.rs
    pos = {r: i for i, r in enumerate(rs.all)}
    nroots = len(rs.all)
    dim = nroots + rs.rank
    c = np.zeros((dim, dim, dim), dtype=np.int64)
    for (r, s), t in rs.sums.items():
        c[pos[r], pos[s], pos[t]] = table.value(r, s)
    for r in rs.all:
        for q, k in enumerate(rs.coroot_coeffs(r)):
            c[pos[r], pos[-r], nroots + q] = k
        for q, f in enumerate(rs.fundamental):
            a = rs.cartan_integer(r, f)
            c[nroots + q, pos[r], pos[r]] = a
            c[pos[r], nroots + q, pos[r]] = -a
    return c


def jacobi_defect(table: IntTable) -> np.ndarray:
    """``[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`` for every basis triple, shape (52,)*4."""
    c = structure_tensor(table).astype(np.float64)
    # nested[j, k, i, m] = coefficient of x_m in [x_i, [x_j, x_k]]
    nested = np.tensordot(c, c, axes=([2], [1]))
    # entries are small integers, so float64 sums are exact
    return nested.transpose(2, 0, 1, 3) + nested.transpose(1, 2, 0, 3) + nested


def jacobi_oracle(table: IntTable) -> bool:
    return not np.any(jacobi_defect(table))


def jacobi_failures(table: IntTable, limit: int = 10) -> list[tuple[int, int, int]]:
    bad = np.argwhere(np.any(jacobi_defect(table) != 0, axis=3))
    return [tuple(int(x) for x in row) for row in bad[:limit]]


class AdjointModel:
    """Root elements ``x_r(t) = exp(t ad e_r)`` as exact 52×52 integer matrices.

    ``ad e_r`` is nilpotent of order 3 on this basis and ``(ad e_r)^k / k!``
    is integral, so no rational arithmetic is needed.  The model is faithful
    on the adjoint group, which makes it an oracle for commutator formulas
    and for collection.
    """

    def __init__(self, table: IntTable):
        c = structure_tensor(table)
        self.rs = table.rs
        self.dim = c.shape[0]
        pos = {r: i for i, r in enumerate(self.rs.all)}
        # (ad e_r)[m, j] = C[r, j, m]
        self._powers = {}
        for r in self.rs.all:
            ad = c[pos[r]].T.copy()
            sq = ad @ ad
            if (sq % 2).any() or (sq @ ad).any():
                raise ValueError(f"ad e_{r} is not of the expected nilpotent form")
            self._powers[r] = (ad, sq // 2)

    def element(self, root, t: int) -> np.ndarray:
        ad, half_sq = self._powers[root]
        return np.eye(self.dim, dtype=np.int64) + t * ad + (t * t) * half_sq

    def product(self, factors) -> np.ndarray:
        out = np.eye(self.dim, dtype=np.int64)
        for root, t in factors:
            out = out @ self.element(root, int(t))
        return out

    def commutator(self, s, u: int, r, t: int) -> np.ndarray:
        """``[x_s(u), x_r(t)] = x_s(-u) x_r(-t) x_s(u) x_r(t)``."""
        return self.product([(s, -u), (r, -t), (s, u), (r, t)])
