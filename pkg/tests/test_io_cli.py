import json

import pytest
from hypothesis import given, strategies as st

from argaudit import (
    GenParams,
    ParseError,
    PreferenceBasedFramework,
    UndeclaredArgument,
    generate_framework,
    parse_framework,
    serialize_framework,
)
from argaudit.cli import main
from conftest import AF, frameworks


class TestParse:
    def test_simple(self):
        assert parse_framework("arg(a).\narg(b).\natt(a,b).") == AF("ab", ["ab"])

    def test_undeclared(self):
        with pytest.raises(UndeclaredArgument) as info:
            parse_framework("arg(a).\natt(a,c).")
        assert info.value.label == "c" and info.value.line == 2

    def test_preferences_make_a_paf(self):
        fw = parse_framework("arg(a).\narg(b).\narg(c).\natt(a,b).\npref(a,c).\npref(b,c).")
        assert isinstance(fw, PreferenceBasedFramework)
        assert fw.prefs == {("a", "c"), ("b", "c")}

    def test_comments_blanks_duplicates_and_inline_statements(self):
        text = "# header\n\narg(a). arg(b).  # two on one line\natt(a,b).\natt( a , b ).\n"
        assert parse_framework(text) == AF("ab", ["ab"])

    def test_declaration_order_is_free(self):
        assert parse_framework("att(a,b).\narg(a).\narg(b).") == AF("ab", ["ab"])

    @pytest.mark.parametrize(
        "text,line",
        [("arg(a)", 1), ("arg(a).\nfoo(b).", 2), ("arg(a-b).", 1), ("arg(a).\natt(a).", 2), ("arg(a).junk", 1)],
    )
    def test_malformed(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_framework(text)
        assert info.value.line == line

    def test_case_sensitive(self):
        assert parse_framework("arg(A).arg(a).").arguments == {"A", "a"}


class TestSerialize:
    def test_canonical(self):
        assert serialize_framework(AF("ba", ["ab"])) == "arg(a).\narg(b).\natt(a,b).\n"
        assert serialize_framework(AF("")) == ""

    def test_paf_round_trip(self):
        paf = PreferenceBasedFramework({"a", "b", "c"}, {("a", "b")}, {("a", "b"), ("b", "c")})
        assert parse_framework(serialize_framework(paf)) == paf


@given(frameworks(max_args=6))
def test_round_trip(af):
    assert parse_framework(serialize_framework(af)) == af


def test_round_trip_generated():
    for seed in range(500):
        af = generate_framework(GenParams(seed % 8, 0.3, seed % 2 == 0, seed=seed))
        assert parse_framework(serialize_framework(af)) == af


# -- command line -------------------------------------------------------------


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve(capsys, write):
    f = write("chain.af", "arg(a).arg(b).att(a,b).")
    code, out, _ = run(capsys, "solve", "--file", f, "--semantics", "grounded")
    assert code == 0
    assert json.loads(out)["extensions"] == [["a"]]
    code, out, _ = run(capsys, "solve", "--file", f, "--semantics", "naive", "--mode", "decide_union", "--format", "text")
    assert "decision_set: {a, b}" in out


def test_solve_stable_intersection_is_an_input_error(capsys, write):
    f = write("c3.af", "arg(a).arg(b).arg(c).att(a,b).att(b,c).att(c,a).")
    code, _, err = run(capsys, "solve", "--file", f, "--semantics", "stable", "--mode", "skeptical")
    assert code == 2 and "no extensions" in err


def test_audit_flags_first_violation(capsys, write):
    f0 = write("f0.af", "arg(p).arg(a).att(a,p).")
    f1 = write("f1.af", "arg(p).arg(a).arg(b).arg(c).att(a,p).att(a,b).att(b,c).att(c,a).")
    code, out, _ = run(capsys, "audit", "--files", f0, f1, "--semantics", "complete", "--mode", "decide_intersection")
    report = json.loads(out)
    assert code == 1
    step = report["steps"][0]
    assert step["expansion_flags"] == ["expansion", "normal"]
    assert step["decision_set"] == {"base": ["a"], "expanded": []}
    assert step["verdict"]["holds"] is False
    assert report["first_violation"] == 1 and report["status"] == "violation"


def test_audit_require_rational_man_stops_early(capsys, write):
    f0 = write("f0.af", "arg(p).arg(a).att(a,p).")
    f1 = write("f1.af", "arg(p).arg(a).arg(b).arg(c).att(a,p).att(a,b).att(b,c).att(c,a).")
    code, out, _ = run(capsys, "audit", "--files", f0, f1, "--require", "rational-man")
    report = json.loads(out)
    assert code == 1 and report["status"] == "rejected"
    assert "verdict" not in report["steps"][0]


def test_audit_clean_chain(capsys, write):
    f0 = write("f0.af", "arg(a).arg(b).att(a,b).")
    f1 = write("f1.af", "arg(a).arg(b).arg(c).att(a,b).att(c,b).")
    f2 = write("f2.af", "arg(a).arg(b).arg(c).arg(d).att(a,b).att(c,b).att(d,c).")
    code, out, _ = run(capsys, "audit", "--files", f0, f1, f2, "--require", "rational-man")
    report = json.loads(out)
    assert code == 0 and report["status"] == "ok"
    assert [s["index"] for s in report["steps"]] == [1, 2]


def test_audit_preference_frameworks(capsys, write):
    p1 = write("p1.af", "arg(a).arg(b).arg(c).att(a,b).pref(a,c).pref(b,c).")
    p2 = write("p2.af", "arg(a).arg(b).arg(c).arg(d).att(a,b).att(b,d).att(d,a).pref(a,c).pref(b,c).pref(d,c).")
    code, out, _ = run(capsys, "audit", "--files", p1, p2)
    report = json.loads(out)
    assert code == 1
    assert report["steps"][0]["expansion_flags"] == ["normal_paf"]
    assert report["steps"][0]["decision_set"] == {"base": ["a", "c"], "expanded": ["c"]}


def test_check_expansion_and_principle(capsys, write):
    base = write("b.af", "arg(a).arg(b).att(a,b).")
    expanded = write("x.af", "arg(a).arg(b).arg(c).att(a,b).att(b,c).att(c,a).")
    code, out, _ = run(capsys, "check-expansion", "--base", base, "--expanded", expanded)
    assert code == 0 and json.loads(out)["flags"] == ["expansion", "normal"]
    code, out, _ = run(
        capsys, "check-principle", "--principle", "weak_ref_independence", "--semantics", "cf2",
        "--base", base, "--expanded", expanded,
    )
    assert code == 0 and json.loads(out)["holds"] is True
    code, out, _ = run(
        capsys, "check-principle", "--principle", "weak_ref_independence", "--semantics", "complete",
        "--mode", "skeptical", "--base", base, "--expanded", expanded,
    )
    assert code == 1 and json.loads(out)["witness"]["base_extension"] == ["a"]


def test_check_principle_mode_mismatch(capsys, write):
    base = write("b.af", "arg(a).")
    code, _, err = run(
        capsys, "check-principle", "--principle", "decision_ref_independence", "--semantics", "grounded",
        "--base", base, "--expanded", base,
    )
    assert code == 2 and "decide_union" in err


def test_search_and_generate(capsys, write):
    code, out, _ = run(
        capsys, "search", "--semantics", "cf2", "--principle", "weak_ref_independence",
        "--max-args", "5", "--random", "100", "--seed", "1",
    )
    assert code == 0 and json.loads(out)["counterexamples"] == []
    code, out, _ = run(
        capsys, "search", "--semantics", "grounded", "--principle", "weak_ref_independence",
        "--max-args", "2", "--exhaustive",
    )
    assert code == 1 and json.loads(out)["counterexamples"]

    code, first, _ = run(capsys, "generate", "--args", "4", "--attack-prob", "0.4", "--seed", "9")
    _, second, _ = run(capsys, "generate", "--args", "4", "--attack-prob", "0.4", "--seed", "9")
    assert code == 0 and first == second
    base = write("g.af", first)
    code, out, _ = run(capsys, "generate", "--expand-from", base, "--new-args", "2", "--attack-prob", "0.5", "--rational-man")
    assert code == 0 and "arg(b1)." in out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["solve", "--file", "/nonexistent", "--semantics", "grounded"],
        ["solve", "--semantics", "grounded"],
        ["search", "--semantics", "grounded", "--principle", "weak_monotony", "--max-args", "9", "--exhaustive"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    assert main(argv) == 2


def test_bad_file_reports_line(capsys, write):
    f = write("bad.af", "arg(a).\natt(a,z).\n")
    code, _, err = run(capsys, "solve", "--file", f, "--semantics", "grounded")
    assert code == 2 and "line 2" in err


def test_output_is_stable(capsys, write):
    f = write("x.af", "arg(c).arg(b).arg(a).att(a,b).att(b,c).att(c,a).")
    outs = {run(capsys, "solve", "--file", f, "--semantics", "naive")[1] for _ in range(3)}
    assert len(outs) == 1
