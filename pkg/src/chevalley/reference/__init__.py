"""Reference tables shipped with the package.

Matrices use signed root ordinals as row and column labels; the corner cell
names the orientation (``r\\s`` means rows are ``r``).
"""
from __future__ import annotations

import csv
from importlib import resources

import numpy as np


def read_rows(name: str) -> list[list[str]]:
    text = resources.files(__name__).joinpath(name).read_text()
    return list(csv.reader(text.splitlines()))


def read_records(name: str) -> list[dict[str, str]]:
    rows = read_rows(name)
    return [dict(zip(rows[0], row)) for row in rows[1:]]


def read_matrix(name: str) -> tuple[list[int], list[int], np.ndarray]:
    """``(row labels, column labels, values)``; blank cells read as 0."""
    rows = read_rows(name)
    cols = [int(x) for x in rows[0][1:]]
    labels = [int(r[0]) for r in rows[1:]]
    values = np.array([[int(x or 0) for x in r[1:]] for r in rows[1:]], dtype=np.int64)
    return labels, cols, values


def names() -> list[str]:
    return sorted(p.name for p in resources.files(__name__).iterdir() if p.name.endswith(".csv"))
