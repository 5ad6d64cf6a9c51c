import io
import json

import pytest

from sortsubst.cli import main

SMALL = ["--max-type-depth", "1", "--max-ctx-len", "1", "--max-expr-size", "3",
         "--max-sub-entry-size", "2", "--max-itm-size", "3"]


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_check():
    assert run("check", "--ctx", "[o]", "--term", "#0") == (0, "o\n")
    assert run("check", "--ctx", "[]", "--term", "\\(o). `#0") == (0, "o -> o\n")
    assert run("check", "--ctx", "[o]", "--term", "p1 id", "--explicit") == (0, "o\n")


def test_user_errors_exit_1(capsys):
    assert run("check", "--ctx", "[o]", "--term", "#1")[0] == 1
    assert run("check", "--ctx", "[o", "--term", "#0")[0] == 1
    assert run("norm", "--ctx", "[]", "--term", "p1 id")[0] == 1
    assert run("eq", "--ctx", "[o]", "--lhs", "p1 id", "--rhs", "\\(o). p1 id")[0] == 1
    err = capsys.readouterr().err
    assert "error" in err and "^" in err
    assert run("laws", "--law", "nope")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["bogus"], io.StringIO())
    assert exc.value.code == 1


def test_norm():
    assert run("norm", "--ctx", "[]", "--term", "\\(o). p1 id") == (0, "\\(o). `#0\n")


def test_norm_reads_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("(p1 id)[id]"))
    assert run("norm", "--ctx", "[o]", "--term", "-") == (0, "`#0\n")


def test_eq():
    code, out = run("eq", "--ctx", "[o]", "--lhs", "(p1 id)[id]", "--rhs", "p1 id")
    assert code == 0 and out.splitlines()[0] == "EQUAL"
    code, out = run("eq", "--ctx", "[o, o]", "--lhs", "p1 id", "--rhs", "p1 p0 id")
    assert code == 2 and out.splitlines() == ["DISTINCT", "lhs: `#0", "rhs: `#1"]


def test_laws_text_and_json():
    code, out = run("laws", *SMALL, "--group", "subst")
    assert code == 0 and out.rstrip().endswith("21 laws, 0 with counterexamples")
    code, out = run("laws", *SMALL, "--json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 65
    assert all(set(r) == {"law", "checked", "elapsed_ms"} and r["elapsed_ms"] is None for r in rows)
    _, timed = run("laws", *SMALL, "--law", "[id]", "--json", "--timings")
    assert isinstance(json.loads(timed)[0]["elapsed_ms"], float)


def test_laws_json_is_byte_stable():
    assert run("laws", *SMALL, "--json") == run("laws", *SMALL, "--json")


def test_laws_budget_and_random():
    code, out = run("laws", "--law", "[∘]", "--time-budget", "0.5", "--json")
    (row,) = json.loads(out)
    assert code == 0 and row["complete"] is False
    code, out = run("laws", "--random", "5", "--seed", "1")
    assert code == 0 and "65 laws, 0 with counterexamples" in out


def test_bench():
    code, out = run("bench", "--sizes", "10,50", "--json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 4
    assert all(r["equal"] and r["factored_visits"] > 0 and r["naive_visits"] > 0 for r in rows)
