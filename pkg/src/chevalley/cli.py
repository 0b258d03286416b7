"""Command-line interface: ``chevalley <command> [options]``.

Exit status: 0 success, 1 a verification failed, 2 usage error,
3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from .collector import Collector, theorem6_series
from .constants import f4_symbolic_table, require_total
from .errors import ChevalleyError, HeightOverflow, InconsistencyError
from .export import (
    CONSTANT_PARTS,
    constants_matrix,
    constants_rows,
    dumps,
    matrix_json,
    matrix_plain,
    records_csv,
    records_plain,
    roots_rows,
    to_csv,
)
from .formulas import SECTIONS, catalog_json, render_formula_catalog
from .graphs import build_graph, k_matrix, matrix_rows, parse_delta, path_matrix, to_dot
from .polynomial import parse_polynomial
from .roots import build_f4
from .signs import all_plus, parse_assignment

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3
FORMATS = ("plain", "csv", "json", "dot")


class UsageError(Exception):
    pass


# shared option parsing -------------------------------------------------------


def _color_enabled(stream) -> bool:
    mode = os.environ.get("CHEVALLEY_COLOR", "auto")
    if mode not in ("never", "auto"):
        raise UsageError(f"CHEVALLEY_COLOR must be 'never' or 'auto', got {mode!r}")
    return mode == "auto" and hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, ok: bool, color: bool) -> str:
    if not color:
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def load_assignment(spec: str) -> dict:
    """``all-plus`` or a JSON file mapping sign names to +1/-1; must be total."""
    symbols = f4_symbolic_table().symbols
    if spec == "all-plus":
        return all_plus(symbols)
    try:
        data = json.loads(Path(spec).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read sign file {spec}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("sign file must hold a JSON object")
    assignment = parse_assignment(data)
    require_total(assignment, symbols)
    return assignment


def _delta(text: str) -> tuple[str, ...]:
    try:
        return parse_delta(text)
    except (ValueError, ChevalleyError) as exc:
        raise UsageError(str(exc)) from None


def _root(text: str):
    try:
        return build_f4().parse(text)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _require_format(args, allowed: Sequence[str]) -> None:
    if args.format not in allowed:
        raise UsageError(f"{args.command} does not support --format {args.format}")


# commands --------------------------------------------------------------------


def cmd_roots(args) -> tuple[int, str]:
    _require_format(args, ("plain", "csv", "json"))
    rows = roots_rows(build_f4())
    if args.format == "json":
        return EXIT_OK, dumps(rows)
    return EXIT_OK, records_csv(rows) if args.format == "csv" else records_plain(rows)


def _table(args):
    symbolic = f4_symbolic_table()
    if args.symbolic:
        return symbolic, None
    assignment = load_assignment(args.signs)
    return symbolic.specialize(assignment), assignment


def _assignment_json(assignment) -> Optional[dict]:
    if assignment is None:
        return None
    return {s.name: v for s, v in sorted(assignment.items(), key=lambda kv: kv[0].sort_key)}


def cmd_constants(args) -> tuple[int, str]:
    _require_format(args, ("plain", "csv", "json"))
    table, assignment = _table(args)
    if args.layout == "matrix":
        if args.part not in ("pos-pos", "pos-neg"):
            raise UsageError("--layout matrix needs --part pos-pos or pos-neg")
        rows = constants_matrix(table, args.part)
        if args.format == "json":
            return EXIT_OK, dumps({"symbolic": args.symbolic, "assignment": _assignment_json(assignment),
                                   "part": args.part, "rows": rows})
        return EXIT_OK, to_csv(rows) if args.format == "csv" else matrix_plain(rows)
    records = constants_rows(table, args.part)
    if args.format == "json":
        return EXIT_OK, dumps({"symbolic": args.symbolic, "assignment": _assignment_json(assignment),
                               "part": args.part, "entries": records})
    return EXIT_OK, records_csv(records) if args.format == "csv" else records_plain(records)


def cmd_formulas(args) -> tuple[int, str]:
    _require_format(args, ("plain", "json"))
    table = f4_symbolic_table()
    assignment = None if args.symbolic else load_assignment(args.signs)
    if args.format == "json":
        data = catalog_json(table, assignment)
        if args.section != "all":
            data = {args.section: data[args.section]}
        return EXIT_OK, dumps(data)
    text = render_formula_catalog(table, assignment, greek=args.greek)
    if args.section != "all":
        blocks = text.split("# ")
        text = "".join("# " + b for b in blocks if b.startswith(args.section + "\n"))
    return EXIT_OK, text


def cmd_graph(args) -> tuple[int, str]:
    delta = _delta(args.delta)
    table, assignment = _table(args)
    graph = build_graph(table.rs, table, args.side, delta)
    if args.format == "dot":
        return EXIT_OK, to_dot(graph, None if args.symbolic else {})
    if args.what == "adjacency":
        values = graph.adjacency()
    elif args.what == "weights":
        if args.symbolic:
            raise UsageError("--what weights needs specialized signs (drop --symbolic)")
        values = graph.weights()
    else:
        values = path_matrix(graph)
    labels = graph.labels
    if args.format == "json":
        return EXIT_OK, dumps(matrix_json(labels, labels, values, kind=args.what, side=args.side,
                                          delta=list(delta), orientation="rows=s,columns=r"))
    rows = matrix_rows(labels, values, "s\\r")
    return EXIT_OK, to_csv(rows) if args.format == "csv" else matrix_plain(rows)


def cmd_k(args) -> tuple[int, str]:
    _require_format(args, ("plain", "csv", "json"))
    delta = _delta(args.delta)
    table, assignment = _table(args)
    if args.symbolic:
        raise UsageError("k needs specialized signs (drop --symbolic)")
    graph = build_graph(table.rs, table, args.side, delta)
    k = k_matrix(graph)
    labels = graph.labels
    if args.r is not None or args.s is not None:
        if args.r is None or args.s is None:
            raise UsageError("give both --r and --s")
        r, s = _root(args.r), _root(args.s)
        if r not in graph.vertices or s not in graph.vertices:
            raise UsageError(f"--r and --s must both lie on the {args.side} side")
        value = int(k[graph.position(r), graph.position(s)])
        if args.format == "json":
            return EXIT_OK, dumps({"r": table.rs.index[r], "s": table.rs.index[s], "value": value})
        return EXIT_OK, f"{value}\n"
    if args.format == "json":
        return EXIT_OK, dumps(matrix_json(labels, labels, k, kind="k", side=args.side, delta=list(delta),
                                          orientation="rows=r,columns=s"))
    rows = matrix_rows(labels, k, "r\\s")
    return EXIT_OK, to_csv(rows) if args.format == "csv" else matrix_plain(rows)


_FACTOR = re.compile(r"x\[([^\]]+)\]\(([^()]*)\)")


def parse_word(text: str):
    factors = []
    pos = 0
    text = text.strip()
    for m in _FACTOR.finditer(text):
        if text[pos : m.start()].strip():
            raise UsageError(f"cannot parse word near {text[pos:m.start()]!r}")
        root = _root(m.group(1))
        if not root.is_positive:
            raise UsageError(f"collect works in the positive subgroup; {m.group(1)} is negative")
        try:
            factors.append((root, parse_polynomial(m.group(2))))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        pos = m.end()
    if text[pos:].strip() or not factors:
        raise UsageError(f"cannot parse word {text!r}")
    return factors


def cmd_collect(args) -> tuple[int, str]:
    _require_format(args, ("plain", "json"))
    table, _ = _table(args)
    if args.symbolic:
        raise UsageError("collect needs specialized signs (drop --symbolic)")
    rs = table.rs
    col = Collector(table)
    if args.word:
        word = col.normalize(parse_word(args.word))
        if args.format == "json":
            return EXIT_OK, dumps({"word": _word_json(word, rs)})
        return EXIT_OK, word.render(rs) + "\n"
    if not 1 <= args.w <= 10:
        raise UsageError("--w must be between 1 and 10")
    delta = _delta(args.delta)
    try:
        series = theorem6_series(rs, table, delta, args.m, args.w, col)
    except HeightOverflow as exc:
        raise UsageError(str(exc)) from None
    result = series[-1]
    status = EXIT_OK if result.ok else EXIT_FAIL
    if args.format == "json":
        return status, dumps({
            "delta": list(delta), "m": args.m, "w": args.w, "ok": result.ok,
            "expected": {str(k): v for k, v in result.expected.items()},
            "actual": {str(k): v for k, v in result.actual.items()},
        })
    lines = [f"delta={','.join(delta)} m={args.m} w={args.w} height={result.height}"]
    for key in sorted(result.expected):
        exp, act = result.expected[key], result.actual[key]
        mark = "ok" if exp == act else "MISMATCH"
        lines.append(f"x[{key}] linear part {_linear_text(act)}; expected {_linear_text(exp)} {mark}")
    return status, "\n".join(lines) + "\n"


def _linear_text(coeffs: dict) -> str:
    if not coeffs:
        return "0"
    keyed = sorted(coeffs.items(), key=lambda kv: int(kv[0][1:]))
    text = " ".join(f"{'-' if v < 0 else '+'} {abs(v)}*{k}" for k, v in keyed)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _word_json(word, rs) -> list[dict]:
    return [{"root": rs.index[r], "label": r.label, "argument": str(p)} for r, p in word.factors]


def cmd_verify(args) -> tuple[int, str]:
    _require_format(args, ("plain", "json"))
    from .verify import CHECKS, run_check

    wanted = args.check or [n for n, *_ in CHECKS]
    if any(n not in {c[0] for c in CHECKS} for n in wanted):
        raise UsageError("--check must be between 1 and 12")
    results = [run_check(n, args.jobs or os.cpu_count() or 1) for n in wanted]
    passed = all(r.ok and (r.in_time or not args.strict_time) for r in results)
    status = EXIT_OK if passed else EXIT_FAIL
    if args.format == "json":
        checks = []
        for r in results:
            item = {"number": r.number, "name": r.name, "ok": r.ok, "bound_seconds": r.bound, "detail": r.detail}
            if args.timings:
                item["seconds"] = round(r.seconds, 3)
            checks.append(item)
        return status, dumps({"passed": passed, "checks": checks})
    color = _color_enabled(sys.stdout) and args.output is None
    lines = []
    for r in results:
        tag = _paint("PASS" if r.ok else "FAIL", r.ok, color)
        timing = f" [{r.seconds:.2f}s / {r.bound:g}s]" if args.timings else ""
        lines.append(f"{tag} {r.number:2d} {r.name}{timing}: {r.detail}")
    return status, "\n".join(lines) + "\n"


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("-o", "--output", help="write to this file instead of standard output")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")

    signs = argparse.ArgumentParser(add_help=False)
    group = signs.add_mutually_exclusive_group()
    group.add_argument("--signs", "--assignment", dest="signs", default="all-plus",
                       help="'all-plus' or a JSON file of sign values")
    group.add_argument("--symbolic", action="store_true", help="keep the free signs as symbols")

    side = argparse.ArgumentParser(add_help=False)
    side.add_argument("--side", choices=("pos", "neg"), default="neg")
    side.add_argument("--delta", default="a,b,c,d", help="comma-separated subset of a,b,c,d")

    parser = argparse.ArgumentParser(prog="chevalley", description="F4 structure constants and friends")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("roots", parents=[common], help="positive roots with ordinals and coordinates")

    p = sub.add_parser("constants", parents=[common, signs], help="structure constants N_{r,s}")
    p.add_argument("--part", choices=CONSTANT_PARTS, default="all")
    p.add_argument("--layout", choices=("list", "matrix"), default="list")

    p = sub.add_parser("formulas", parents=[common, signs], help="commutator formula catalog")
    p.add_argument("--section", choices=SECTIONS + ("all",), default="all")
    p.add_argument("--greek", action="store_true", help="Greek sign symbols in plain output")

    p = sub.add_parser("graph", parents=[common, signs, side], help="root graph matrices or DOT")
    p.add_argument("--what", choices=("adjacency", "weights", "paths"), default="adjacency")

    p = sub.add_parser("k", parents=[common, signs, side], help="K numbers by matrix powers")
    p.add_argument("--r", help="row root (signed ordinal, quadruple or label)")
    p.add_argument("--s", help="column root")

    p = sub.add_parser("collect", parents=[common, signs], help="collection in the unipotent subgroup")
    p.add_argument("--delta", default="a,b,c,d")
    p.add_argument("--m", type=int, default=1, help="height of the roots in B")
    p.add_argument("--w", type=int, default=10, help="commutator depth, 1..10")
    p.add_argument("--word", help="normalize a word such as 'x[10](t) x[4](u)' instead")

    p = sub.add_parser("verify", parents=[common], help="run the reproduction checks")
    p.add_argument("--all", action="store_true", help="run every check (the default)")
    p.add_argument("--check", type=int, action="append", help="run only this check number")
    p.add_argument("--timings", action="store_true", help="show run times (output no longer byte-stable)")
    p.add_argument("--strict-time", action="store_true", help="also fail checks that exceed their time bound")
    return parser


COMMANDS = {
    "roots": cmd_roots,
    "constants": cmd_constants,
    "formulas": cmd_formulas,
    "graph": cmd_graph,
    "k": cmd_k,
    "collect": cmd_collect,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.jobs is not None and args.jobs < 1:
            raise UsageError("--jobs must be positive")
        if args.format == "dot" and args.command != "graph":
            raise UsageError("--format dot is only valid for graph")
        status, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"chevalley: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"chevalley: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ChevalleyError, ValueError) as exc:
        print(f"chevalley: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            print(f"chevalley: error: cannot write {args.output}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
