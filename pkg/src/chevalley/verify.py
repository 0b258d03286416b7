"""End-to-end reproduction checks against the shipped reference tables.

Each check returns a ``CheckResult``; ``run_all`` is what ``chevalley verify``
executes.  Random sign assignments come from a seeded generator, so a run is
reproducible and independent of the number of worker processes.
"""
from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional


from . import reference
from .checks import AdjointModel, jacobi_oracle, verify_relations
from .collector import Collector, random_word, theorem6_series
from .constants import f4_symbolic_table, find_extraspecial, random_assignment
from .export import constants_matrix, roots_rows
from .formulas import formula
from .graphs import build_graph, k_matrix, k_number_bruteforce, path_matrix, theorem5_check
from .roots import build_f4
from .signs import SignMonomial, all_plus

DELTAS = {"abcd": "a,b,c,d", "bcd": "b,c,d"}


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float
    bound: float

    @property
    def in_time(self) -> bool:
        return self.seconds < self.bound

    @property
    def passed(self) -> bool:
        return self.ok and self.in_time


def _assignments(count: int, seed: int) -> list[dict]:
    symbols = f4_symbolic_table().symbols
    rng = random.Random(seed)
    return [all_plus(symbols)] + [random_assignment(symbols, rng) for _ in range(count)]


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# individual checks ---------------------------------------------------------


def check_roots() -> tuple[bool, str]:
    rs = build_f4()
    got = [[str(v) for v in row.values()] for row in roots_rows(rs)]
    want = reference.read_rows("roots.csv")[1:]
    bad = [g[0] for g, w in zip(got, want) if g != w]
    ok = len(got) == len(want) == 24 and not bad
    return ok, f"{len(got)} rows, {len(bad)} differ"


def check_extraspecial() -> tuple[bool, str]:
    rs = build_f4()
    choice = find_extraspecial(rs)
    got = [(r.quad, s.quad, str(choice.values[(r, s)])) for r, s in choice.pairs]
    want = [(x["r"], x["s"], x["value"]) for x in reference.read_records("extraspecial.csv")]
    return got == want, f"{len(got)} pairs found, {len(want)} expected"


def check_symbolic() -> tuple[bool, str]:
    table = f4_symbolic_table()
    rs = table.rs
    rows = reference.read_records("symbolic_constants.csv")
    bad = [
        (x["r"], x["s"])
        for x in rows
        if table.entry(rs.parse(x["r"]), rs.parse(x["s"])) != SignMonomial.parse(x["value"])
    ]
    return not bad and len(rows) >= 30, f"{len(rows)} entries, mismatches: {bad or 'none'}"


def special_discrepancies() -> tuple[list[tuple[int, int, int, int]], list[tuple[int, int]]]:
    """Cells where the all-plus table differs from the reference one, and the
    subset that the relation suite does *not* refute."""
    table = f4_symbolic_table().specialize(all_plus())
    rs = table.rs
    diffs, unrefuted = [], []
    for part in ("pos-pos", "pos-neg"):
        got = constants_matrix(table, part)
        want = reference.read_rows(f"special_{part.replace('-', '_')}.csv")
        cols = [int(c) for c in want[0][1:]]
        for g, w in zip(got[1:], want[1:]):
            i = int(w[0])
            for j, a, b in zip(cols, g[1:], w[1:]):
                if a != (b or "0"):
                    diffs.append((i, j, int(a), int(b or 0)))
                    r, s = rs.root(i), rs.root(j)
                    altered = table.with_value((r, s), int(b or 0))
                    if verify_relations(altered).ok:
                        unrefuted.append((i, j))
    return diffs, unrefuted


def check_special() -> tuple[bool, str]:
    diffs, unrefuted = special_discrepancies()
    return not unrefuted, f"{len(diffs)} reference cells differ, {len(unrefuted)} not refuted"


def _relations_one(assignment: dict) -> bool:
    return verify_relations(f4_symbolic_table().specialize(assignment)).ok


def _jacobi_one(assignment: dict) -> bool:
    return jacobi_oracle(f4_symbolic_table().specialize(assignment))


def check_relations(jobs: int = 1, count: int = 100, seed: int = 1) -> tuple[bool, str]:
    results = _map(_relations_one, _assignments(count, seed), jobs)
    return all(results), f"{sum(results)}/{len(results)} tables satisfy (i)-(iv)"


def check_jacobi(jobs: int = 1, count: int = 100, seed: int = 2) -> tuple[bool, str]:
    results = _map(_jacobi_one, _assignments(count, seed), jobs)
    return all(results), f"{sum(results)}/{len(results)} tables satisfy Jacobi"


def reference_terms(text: str, rs) -> Optional[list[tuple]]:
    """``root:i:j:coeff;...`` -> list of (root, i, j, coeff); None if a root is invalid."""
    out = []
    for item in text.split(";"):
        root, i, j, coeff = item.split(":")
        try:
            r = rs.parse(root)
        except KeyError:
            return None
        out.append((r, int(i), int(j), SignMonomial.parse(coeff)))
    return out


def refuted(ref_terms: Optional[list[tuple]], s, r, assignments: list[dict], t: int = 2, u: int = 3) -> bool:
    """True if the reference expansion differs from the commutator in the adjoint model."""
    if ref_terms is None:
        return True
    table = f4_symbolic_table()
    for a in assignments:
        model = AdjointModel(table.specialize(a))
        rhs = model.product((root, int(c.evaluate(a)) * t**i * u**j) for root, i, j, c in ref_terms)
        if not (model.commutator(s, u, r, t) == rhs).all():
            return True
    return False


def check_formulas() -> tuple[bool, str]:
    table = f4_symbolic_table()
    rs = table.rs
    listed = {
        (x["list"], x["s"], x["r"]) for x in reference.read_records("formula_discrepancies.csv")
    }
    probes = _assignments(3, seed=7)
    matched = {"symbolic": 0, "allplus": 0}
    problems = []
    for name in ("symbolic", "allplus"):
        for row in reference.read_records(f"formulas_{name}.csv"):
            s, r = rs.parse(row["s"]), rs.parse(row["r"])
            f = formula(table, s, r)
            if name == "allplus":
                f = f.specialized(all_plus())
            ref_terms = reference_terms(row["terms"], rs)
            mine = [(t.root, t.i, t.j, t.argument) for t in f.terms]
            if ref_terms == mine:
                matched[name] += 1
                if (name, row["s"], row["r"]) in listed:
                    problems.append(f"{name} {row['s']},{row['r']} listed but matches")
            elif (name, row["s"], row["r"]) not in listed:
                problems.append(f"{name} {row['s']},{row['r']} differs and is not listed")
            elif not refuted(ref_terms, s, r, probes):
                problems.append(f"{name} {row['s']},{row['r']} differs but is not refuted")
    ok = not problems and min(matched.values()) >= 12
    return ok, f"exact matches {matched}, {len(listed)} reference errors refuted; problems: {problems or 'none'}"


def check_paths() -> tuple[bool, str]:
    rs = build_f4()
    table = f4_symbolic_table().specialize(all_plus())
    bad = []
    for key, delta in DELTAS.items():
        _, _, want = reference.read_matrix(f"paths_neg_{key}.csv")
        if not (path_matrix(build_graph(rs, table, "neg", delta)) == want).all():
            bad.append(key)
    return not bad, f"mismatching: {bad or 'none'}"


def check_k_tables() -> tuple[bool, str]:
    rs = build_f4()
    table = f4_symbolic_table().specialize(all_plus())
    bad, brute_bad = [], 0
    for key, delta in DELTAS.items():
        for side in ("neg", "pos"):
            graph = build_graph(rs, table, side, delta)
            k = k_matrix(graph)
            _, _, want = reference.read_matrix(f"k_{side}_{key}.csv")
            if not (k == want).all():
                bad.append(f"{side}_{key}")
            for i, r in enumerate(graph.vertices):
                for j, s in enumerate(graph.vertices):
                    if k[i, j] != k_number_bruteforce(rs, table, delta, r, s):
                        brute_bad += 1
    return not bad and not brute_bad, f"table mismatches: {bad or 'none'}; brute-force disagreements: {brute_bad}"


def check_theorem5(count: int = 20, seed: int = 5) -> tuple[bool, str]:
    rs = build_f4()
    table = f4_symbolic_table()
    failures = 0
    runs = 0
    for a in _assignments(count, seed):
        for delta in DELTAS.values():
            runs += 1
            if not theorem5_check(rs, table.specialize(a), delta).ok:
                failures += 1
    return not failures, f"{runs - failures}/{runs} assignment/Δ runs hold for all r, s"


def check_theorem6(count: int = 0, seed: int = 6) -> tuple[bool, str]:
    rs = build_f4()
    table = f4_symbolic_table()
    bad = []
    for a in _assignments(count, seed):
        specialized = table.specialize(a)
        col = Collector(specialized)
        for key, delta in DELTAS.items():
            for res in theorem6_series(rs, specialized, delta, 1, 10, col):
                if not res.ok:
                    bad.append((key, res.w))
    return not bad, f"failures (Δ, w): {bad or 'none'}"


def check_group_axioms(cases: int = 500, seed: int = 12) -> tuple[bool, str]:
    rs = build_f4()
    col = Collector(f4_symbolic_table().specialize(all_plus()))
    rng = random.Random(seed)
    bad = 0
    for _ in range(cases):
        x, y, z = (col.normalize(random_word(rs, rng, rng.randint(0, 4)).factors) for _ in range(3))
        if col.multiply(col.multiply(x, y), z) != col.multiply(x, col.multiply(y, z)):
            bad += 1
        if col.multiply(x, col.inverse(x)).factors:
            bad += 1
    return not bad, f"{cases} random triples, {bad} failures"


CHECKS: list[tuple[int, str, float, Callable[..., tuple[bool, str]], bool]] = [
    (1, "root table", 1, check_roots, False),
    (2, "extraspecial pairs", 1, check_extraspecial, False),
    (3, "symbolic constants", 5, check_symbolic, False),
    (4, "all-plus constants", 5, check_special, False),
    (5, "relations (i)-(iv)", 60, check_relations, True),
    (6, "Jacobi identity", 120, check_jacobi, True),
    (7, "commutator formulas", 5, check_formulas, False),
    (8, "path counts", 1, check_paths, False),
    (9, "K tables", 30, check_k_tables, False),
    (10, "K symmetry identity", 10, check_theorem5, False),
    (11, "collection vs K", 60, check_theorem6, False),
    (12, "group-word axioms", 30, check_group_axioms, False),
]


def run_check(number: int, jobs: int = 1) -> CheckResult:
    for n, name, bound, fn, parallel in CHECKS:
        if n == number:
            start = time.perf_counter()
            ok, detail = fn(jobs=jobs) if parallel else fn()
            return CheckResult(n, name, ok, detail, time.perf_counter() - start, bound)
    raise KeyError(number)


def run_all(jobs: Optional[int] = None) -> list[CheckResult]:
    jobs = jobs or os.cpu_count() or 1
    return [run_check(n, jobs) for n, *_ in CHECKS]
