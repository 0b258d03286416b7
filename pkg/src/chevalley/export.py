"""Row builders and writers shared by the command line and the checks."""
from __future__ import annotations

import csv
import io
import json
from typing import Any, Sequence

import numpy as np

from .constants import ConstantTable, IntTable
from .roots import Root, RootSystem, order_less

CONSTANT_PARTS = ("all", "special", "pos-pos", "pos-neg")


def roots_rows(rs: RootSystem) -> list[dict[str, Any]]:
    return [
        {
            "ordinal": rs.index[r],
            "quad": r.quad,
            "euclid": r.euclid_label,
            "height": r.height,
            "norm": int(r.norm),
        }
        for r in rs.positive
    ]


def _cell(table: ConstantTable | IntTable, r: Root, s: Root) -> str:
    if isinstance(table, IntTable):
        return str(table.value(r, s))
    return str(table.entry(r, s))


def constant_pairs(rs: RootSystem, part: str) -> list[tuple[Root, Root]]:
    """Pairs with ``r + s`` a root, in listing order.

    ``special``: ``(r, s)`` and ``(r, -s)`` for ``0 < r < s``;
    ``pos-pos`` / ``pos-neg``: ``r`` positive and ``s`` of the given sign.
    """
    if part not in CONSTANT_PARTS:
        raise ValueError(f"unknown part {part!r}")
    if part == "all":
        return [p for p in ((r, s) for r in rs.all for s in rs.all) if p in rs.sums]
    out = []
    for r in rs.positive:
        for s in rs.positive:
            if part == "special":
                if not order_less(r, s):
                    continue
                out.extend(p for p in ((r, s), (r, -s)) if p in rs.sums)
            elif part == "pos-pos" and (r, s) in rs.sums:
                out.append((r, s))
            elif part == "pos-neg" and (r, -s) in rs.sums:
                out.append((r, -s))
    return out


def constants_rows(table: ConstantTable | IntTable, part: str = "all") -> list[dict[str, Any]]:
    rs = table.rs
    return [
        {"r": r.label, "s": s.label, "r_ordinal": rs.index[r], "s_ordinal": rs.index[s], "value": _cell(table, r, s)}
        for r, s in constant_pairs(rs, part)
    ]


def constants_matrix(table: ConstantTable | IntTable, part: str) -> list[list[str]]:
    """Square layout with signed-ordinal headers.

    ``pos-pos``: rows and columns ``1..23``, every cell.
    ``pos-neg``: rows ``1..23``, columns ``-1..-24``; only cells with
    ``|s| > r`` are filled, the others (implied by symmetry) print as 0.
    """
    rs = table.rs
    n = len(rs.positive)
    rows_idx = range(1, n)
    if part == "pos-pos":
        cols = list(range(1, n))
    elif part == "pos-neg":
        cols = [-k for k in range(1, n + 1)]
    else:
        raise ValueError("matrix layout needs part pos-pos or pos-neg")
    out = [["r\\s"] + [str(c) for c in cols]]
    for i in rows_idx:
        row = [str(i)]
        for j in cols:
            if j < 0 and -j <= i:
                row.append("0")
            else:
                row.append(_cell(table, rs.root(i), rs.root(j)))
        out.append(row)
    return out


def to_csv(rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def records_csv(records: Sequence[dict[str, Any]]) -> str:
    if not records:
        return ""
    head = list(records[0])
    return to_csv([head] + [[rec[k] for k in head] for rec in records])


def records_plain(records: Sequence[dict[str, Any]]) -> str:
    """Aligned columns, one record per line."""
    if not records:
        return ""
    head = list(records[0])
    table = [head] + [[str(rec[k]) for k in head] for rec in records]
    widths = [max(len(row[i]) for row in table) for i in range(len(head))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in table)


def matrix_plain(rows: Sequence[Sequence[Any]]) -> str:
    table = [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(table[0]))]
    return "".join(" ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n" for row in table)


def matrix_json(row_labels: Sequence[int], col_labels: Sequence[int], values: np.ndarray, **meta: Any) -> dict:
    return {
        **meta,
        "rows": [int(x) for x in row_labels],
        "columns": [int(x) for x in col_labels],
        "values": [[int(v) for v in row] for row in values],
    }


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def load_schema(name: str) -> dict:
    """A JSON schema shipped under ``schemas/``, e.g. ``load_schema("roots")``."""
    from importlib import resources

    text = resources.files("chevalley").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)
