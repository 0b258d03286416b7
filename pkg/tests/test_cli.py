import json
import subprocess
import sys

import jsonschema
import pytest

from chevalley import reference
from chevalley.cli import main
from chevalley.export import load_schema
from chevalley.signs import SignMonomial, SignSymbol, all_symbols


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _csv(text):
    return [line.split(",") for line in text.strip().splitlines()]


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "--format", "csv")
    assert code == 0
    assert out.splitlines()[21] == "21,1232,e1,8,1"
    code, out, _ = run(capsys, "roots")
    assert len(out.strip().splitlines()) == 25


@pytest.mark.parametrize(
    "argv, schema",
    [
        (["roots"], "roots"),
        (["constants", "--symbolic"], "constants"),
        (["constants", "--part", "pos-neg", "--layout", "matrix"], "constants"),
        (["formulas", "--section", "mixed"], "formulas"),
        (["formulas", "--symbolic"], "formulas"),
        (["graph", "--side", "neg", "--delta", "b,c,d", "--what", "paths"], "matrix"),
        (["k", "--side", "pos"], "matrix"),
        (["k", "--r", "-2", "--s", "-9"], "k_cell"),
        (["collect", "--delta", "b,c,d", "--w", "4"], "collect"),
        (["collect", "--word", "x[10](t) x[4](u)"], "collect"),
        (["verify", "--check", "1", "--check", "8"], "verify"),
    ],
)
def test_json_outputs_validate(capsys, argv, schema):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), load_schema(schema))


def test_constants_cell(capsys):
    code, out, _ = run(capsys, "constants", "--symbolic", "--format", "csv")
    rows = {(r[0], r[1]): r[4] for r in _csv(out)[1:]}
    assert rows[("c+d", "b+c")] == "e13d2"
    assert len(rows) == 816


@pytest.mark.parametrize("part", ["pos-pos", "pos-neg"])
def test_constants_matrix_matches_reference(capsys, part):
    code, out, _ = run(capsys, "constants", "--part", part, "--layout", "matrix", "--format", "csv")
    want = reference.read_rows(f"special_{part.replace('-', '_')}.csv")
    got = _csv(out)
    assert got[0] == want[0]
    for g, w in zip(got[1:], want[1:]):
        assert g == [x or "0" for x in w]


def test_sign_file_flips_exactly_e4_cells(capsys, tmp_path):
    signs = {s.name: 1 for s in all_symbols()}
    signs["e4"] = -1
    path = tmp_path / "signs.json"
    path.write_text(json.dumps(signs))
    _, plus, _ = run(capsys, "constants", "--format", "csv")
    _, flipped, _ = run(capsys, "constants", "--signs", str(path), "--format", "csv")
    _, symbolic, _ = run(capsys, "constants", "--symbolic", "--format", "csv")
    changed = 0
    for p, f, s in zip(_csv(plus)[1:], _csv(flipped)[1:], _csv(symbolic)[1:]):
        assert p[:2] == f[:2] == s[:2]
        has_e4 = SignSymbol("epsilon", 4) in SignMonomial.parse(s[4]).symbols
        assert (p[4] != f[4]) == has_e4
        if has_e4:
            assert int(p[4]) == -int(f[4])
            changed += 1
    assert changed > 0


def test_partial_sign_file(capsys, tmp_path):
    path = tmp_path / "partial.json"
    path.write_text(json.dumps({"e1": 1}))
    code, out, err = run(capsys, "constants", "--signs", str(path))
    assert code == 2 and not out
    assert "lacks" in err and "e2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["k", "--delta", "a,x"],
        ["k", "--delta", ""],
        ["collect", "--w", "11"],
        ["collect", "--w", "0"],
        ["collect", "--m", "2", "--w", "10"],
        ["collect", "--word", "x[10](t) junk"],
        ["collect", "--word", "x[-3](t)"],
        ["roots", "--format", "dot"],
        ["k", "--r", "99", "--s", "1"],
        ["k", "--r", "-2"],
        ["constants", "--signs", "/nonexistent.json"],
        ["verify", "--check", "13"],
        ["nosuchcommand"],
        ["roots", "--jobs", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_malformed_sign_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("[1, 2]")
    assert run(capsys, "constants", "--signs", str(path))[0] == 2
    path.write_text('{"e1": 5}')
    assert run(capsys, "constants", "--signs", str(path))[0] == 2


def test_k_cell(capsys):
    code, out, _ = run(capsys, "k", "--side", "neg", "--delta", "a,b,c,d", "--r", "-2", "--s", "-9")
    assert (code, out) == (0, "-4\n")
    code, out, _ = run(capsys, "k", "--side", "pos", "--r", "2342", "--s", "0001")
    assert (code, out) == (0, "-24\n")


def test_graph_matches_reference(capsys):
    code, out, _ = run(capsys, "graph", "--side", "neg", "--delta", "b,c,d", "--format", "csv", "--what", "adjacency")
    assert code == 0
    assert _csv(out) == reference.read_rows("adjacency_neg_bcd.csv")
    code, out, _ = run(capsys, "graph", "--delta", "b,c,d", "--format", "dot")
    assert out.startswith("digraph")


def test_collect(capsys):
    code, out, _ = run(capsys, "collect", "--word", "x[10](t) x[4](u)")
    assert out == "x[4](u) x[10](t) x[11](-t*u)\n"
    code, out, _ = run(capsys, "collect", "--w", "10")
    assert code == 0
    assert "x[24] linear part -24*t1 + 150*t2 - 168*t3 + 42*t4" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "roots.csv"
    code, out, _ = run(capsys, "roots", "--format", "csv", "-o", str(target))
    assert code == 0 and out == ""
    assert _csv(target.read_text()) == reference.read_rows("roots.csv")
    assert run(capsys, "roots", "-o", str(tmp_path / "missing" / "x.csv"))[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["constants", "--symbolic"],
        ["formulas", "--greek", "--symbolic"],
        ["k", "--format", "json"],
        ["verify", "--check", "2", "--check", "9"],
    ],
)
def test_byte_deterministic(capsys, argv):
    assert run(capsys, *argv) == run(capsys, *argv)


def test_verify_all_green(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--jobs", "1")
    assert code == 0
    assert out.count("PASS") == 12 and "FAIL" not in out


def test_color_env(capsys, monkeypatch):
    monkeypatch.setenv("CHEVALLEY_COLOR", "always")
    assert run(capsys, "verify", "--check", "1")[0] == 2
    monkeypatch.setenv("CHEVALLEY_COLOR", "never")
    code, out, _ = run(capsys, "verify", "--check", "1")
    assert code == 0 and "\033" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chevalley", "k", "--r", "-2", "--s", "-9"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "-4\n"
