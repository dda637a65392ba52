import io
import json
import subprocess
import sys

import pytest

from cubeshell import (
    ArcWord,
    DoubleOccurrenceWord,
    dow_to_permutation,
    permutation_to_dow,
    word_to_permutation,
)
from cubeshell.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_with_stdin(monkeypatch, text, *argv):
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    return run(*argv)


def test_gen_words():
    assert run("gen", "--n", "2") == (0, "1 1\n1 2\n1 3\n")
    assert run("gen", "--n", "1") == (0, "1\n")
    code, text = run("gen", "--n", "3", "--connected")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 10
    assert lines[0] == "1 1 1" and lines[-1] == "1 3 2"


def test_gen_formats():
    _, perms = run("gen", "--n", "2", "--format", "perms")
    assert perms.splitlines() == ["2 1 -1 -2", "1 2 -1 -2", "1 -1 2 -2"]
    _, dows = run("gen", "--n", "2", "--format", "dow", "--limit", "1")
    assert dows == "1 2 2 1\n"


def test_gen_limit_on_huge_code():
    code, text = run("gen", "--n", "40", "--limit", "3")
    assert code == 0
    assert len(text.splitlines()) == 3
    assert text.splitlines()[-1].split()[-1] == "3"


def test_gen_json_consistency():
    _, text = run("gen", "--n", "4", "--format", "json")
    records = [json.loads(line) for line in text.splitlines()]
    assert len(records) == 105
    for m, rec in enumerate(records, 1):
        assert list(rec) == ["word", "perm", "dow", "connected", "rank"]
        p = word_to_permutation(ArcWord(rec["word"]))
        assert rec["perm"] == list(p.entries)
        assert rec["dow"] == list(permutation_to_dow(p).letters)
        assert dow_to_permutation(DoubleOccurrenceWord(rec["dow"])) == p
        assert rec["rank"] == m


@pytest.mark.parametrize("argv", [["gen"], ["gen", "--n", "0"], ["gen", "--n", "2", "--format", "xml"], ["nope"]])
def test_gen_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_determinism():
    assert run("gen", "--n", "5", "--format", "json") == run("gen", "--n", "5", "--format", "json")


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("connected", [False, True])
def test_pipe_closure(n, connected, monkeypatch):
    flag = ["--connected"] if connected else []
    _, text = run("gen", "--n", str(n), *flag)
    code, report = run_with_stdin(monkeypatch, text, "verify", "--n", str(n), *flag)
    assert code == 0, report
    assert report.startswith("OK")


def test_verify_sharded(monkeypatch):
    _, text = run("gen", "--n", "6")
    code, report = run_with_stdin(monkeypatch, text, "verify", "--n", "6", "--jobs", "3")
    assert code == 0, report
    # break the seam between two shards
    lines = text.splitlines()
    seam = -(-len(lines) // 3)
    lines[seam - 1], lines[seam] = lines[seam], lines[seam - 1]
    code, report = run_with_stdin(
        monkeypatch, "\n".join(lines) + "\n", "verify", "--n", "6", "--jobs", "3"
    )
    assert code == 1
    assert report == run_with_stdin(
        monkeypatch, "\n".join(lines) + "\n", "verify", "--n", "6"
    )[1]


def test_verify_failures(tmp_path, monkeypatch):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1\n1 3\n")
    code, report = run("verify", "--n", "2", "--input", str(bad))
    assert code == 1 and "line 2" in report

    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, report = run("verify", "--n", "2", "--input", str(empty))
    assert code == 1 and "incomplete" in report

    dup = tmp_path / "dup.txt"
    dup.write_text("# comment\n1 1\n1 2\n1 1\n")
    code, report = run("verify", "--n", "2", "--input", str(dup))
    assert code == 1

    code, report = run_with_stdin(monkeypatch, "1 1\n1 2\n1 3\n", "verify", "--n", "2", "--connected")
    assert code == 1 and "line 3" in report


def test_verify_parse_errors(tmp_path, capsys):
    path = tmp_path / "x.txt"
    path.write_text("1 1\n1 4\n")
    assert run("verify", "--n", "2", "--input", str(path))[0] == 2
    path.write_text("1 1 1\n")
    assert run("verify", "--n", "2", "--input", str(path))[0] == 2
    path.write_text("1 a\n")
    assert run("verify", "--n", "2", "--input", str(path))[0] == 2
    assert run("verify", "--n", "2", "--input", str(tmp_path / "missing"))[0] == 2


def test_count():
    assert run("count", "--n", "3") == (0, "15\n")
    assert run("count", "--n", "3", "--connected") == (0, "10\n")
    assert run("count", "--n", "1", "--connected") == (0, "1\n")
    code, text = run("count", "--n", "64")
    assert code == 0 and int(text) % 127 == 0


@pytest.mark.parametrize("n", ["0", "65", "x"])
def test_count_out_of_range(n, capsys):
    assert run("count", "--n", n)[0] == 2


@pytest.mark.parametrize(
    "source, target, value, expected",
    [
        ("word", "perm", "1 3 1", "3 1 -1 2 -2 -3"),
        ("perm", "dow", "3 1 -1 2 -2 -3", "1 2 2 3 3 1"),
        ("word", "word", "1", "1"),
        ("word", "arcs", "131", "2,3 4,5 1,6"),
        ("arcs", "word", "1,3 2,4 5,6", "1 2 5"),
        ("dow", "perm", "122331", "3 1 -1 2 -2 -3"),
    ],
)
def test_convert(source, target, value, expected):
    assert run("convert", "--from", source, "--to", target, value) == (0, expected + "\n")


def test_convert_unquoted_negative_tokens():
    assert run("convert", "--from", "perm", "--to", "word", "3", "1", "-1", "2", "-2", "-3") == (0, "1 3 1\n")


@pytest.mark.parametrize(
    "source, value, needle",
    [("word", "1 4", "a_2"), ("perm", "2 -2 1 -1", "condition (2)"), ("perm", "-1 1", "condition (1)"), ("dow", "2112", "not standard")],
)
def test_convert_errors_name_condition(source, value, needle, capsys):
    assert run("convert", "--from", source, "--to", "word", value)[0] == 2
    assert needle in capsys.readouterr().err


def test_canon():
    assert run("canon", "-2 1 2 -1") == (0, "1 2 -1 -2\n")
    assert run("canon", "3 1 -1 2 -2 -3") == (0, "3 1 -1 2 -2 -3\n")
    assert run("canon", "-1 1") == (0, "1 -1\n")
    code, text = run("canon", "--witness", "-2", "1", "2", "-1")
    assert text == "1 2 -1 -2\nflips: 2\nrelabel: 1->2 2->1\n"


def test_canon_parse_error(capsys):
    assert run("canon", "1 1")[0] == 2


def test_shelling():
    assert run("shelling", "3 1 -1 2 -2 -3") == (0, "SHELLING\n")
    assert run("shelling", "1 2 -1 -2 3 -3") == (1, "NOT-A-SHELLING prefix=4\n")
    assert run("shelling", "1 -1") == (0, "SHELLING\n")
    code, text = run("shelling", "--types", "1 2 -2 -1")
    assert code == 0
    assert text.splitlines()[1:] == ["step 2: (1,0)", "step 3: (1,0)", "step 4: (0,1)"]


def test_render_ascii():
    code, text = run("render", "--ascii", "1 3 1")
    assert code == 0
    lines = text.splitlines()
    assert lines[-1].split() == ["3", "1", "-1", "2", "-2", "-3"]
    assert len(lines) == 5  # three arc rows, a stroke row, the labels
    _, single = run("render", "--ascii", "1")
    assert single.splitlines()[-1].split() == ["1", "-1"]


def test_render_svg(tmp_path):
    path = tmp_path / "fig.svg"
    assert run("render", "--out", str(path), "1 2 5") == (0, "")
    svg = path.read_text()
    assert svg.count("<path") == 3
    assert svg.count("<text") == 6
    assert 'data-arc="3" d="M 190 ' in svg  # minimal arc over positions 5 and 6
    assert run("render", "--out", str(path), "1 2 5")[0] == 0
    assert path.read_text() == svg
    _, single = run("render", "1")
    assert single.count("<path") == 1


def test_render_unwritable(tmp_path, capsys):
    assert run("render", "--out", str(tmp_path / "no" / "such" / "dir.svg"), "1")[0] == 2


def test_module_entry_point_pipe():
    gen = subprocess.run(
        [sys.executable, "-m", "cubeshell", "gen", "--n", "5"],
        capture_output=True, text=True, check=True,
    )
    verify = subprocess.run(
        [sys.executable, "-m", "cubeshell", "verify", "--n", "5"],
        input=gen.stdout, capture_output=True, text=True,
    )
    assert verify.returncode == 0, verify.stdout + verify.stderr
