import io
import json

import jsonschema
import pytest

from cofin.cli import OUTPUT_SCHEMA, main, repl, run_file, run_source
from cofin.interp import EvalError, Session, evaluate
from cofin.syntax import parse

SAMPLE_QUERIES = [
    "cofinite? !{0,2}",
    "dense? Cont(2k..)",
    "dense? P(2k..) | P(2k+1..)",
    "dense? L",
    "ext? Alm(2k..)",
    "dense? Alm(2k..)",
    "u(2k..) in? P(k+1..)",
    "L <=? P(k+1..)",
    "L <=? notnot P(sigma)",
    "not P(2k..)",
    "act(u(2k..), P(4k..))",
    "P(2k..) meets? Alm(4k+2..)",
    "lim C({1,3})",
    "U(2k..) | C({1})",
    "{1} in? U({0}) ->? U({0,2})",
    "U(2k..) <=? frechet",
    "extent born U(2k..)",
    "class per(0;011)",
    "compose(sigma, sigma{0,2})",
    "check clu1 3",
]


@pytest.mark.parametrize("text, answer, witness", [
    ("cofinite? !{0,2}", True, None),
    ("dense? Cont(2k..)", False, "u(2k+1..)"),
    ("L <=? P(k+1..)", False, "u(2k..)"),
    ("L <=? notnot P(k+1..)", True, None),
    ("notnot P(sigma)", "E", None),
    ("lim C({1,3})", "{1,3}", None),
    ("not P(2k..)", "Alm(2k+1..)", None),
    ("act(u(2k..), P(4k..))", "P(2k..)", None),
    ("{1} in? U({0}) ->? U({0,2})", False, "{0}"),
    ("u(2k..) in? P(4k..) ->? P(2k..)", True, None),
    ("dense? phi({};2k..)", True, None),
    ("finite? {} | {3}", True, None),
    ("class 3k+1..", "split", None),
])
def test_eval_examples(text, answer, witness):
    from cofin.interp import literal
    r = evaluate(text)
    assert literal(r.value) == answer
    assert (None if r.witness is None else literal(r.witness)) == witness


def test_check_statement():
    r = evaluate("check clu1 3")
    assert r.value == "pass" and not r.failed
    assert r.report[0]["suite"] == "clu1 3"


@pytest.mark.parametrize("text", [
    "lim P(2k..)", "u({1,2})", "dense? 2k..", "P(2k..) & P(k..)", "U(k..) ->? U(k..)",
    "nope", "check nosuch", "check sigma 3", "2k.. | U(k..)", "assert P(k..)",
])
def test_eval_errors(text):
    with pytest.raises(EvalError):
        evaluate(text)


def test_let_and_seed():
    s = Session()
    s.execute(parse("let A = 2k.."))
    s.execute(parse("let I = P(A) | P(!A)"))
    assert s.execute(parse("dense? I")).value is True
    s.execute(parse("seed 5"))
    assert s.seed == 5


def run(text, *, as_json=False, seed=1):
    out = io.StringIO()
    code = run_source(text, seed, as_json, out)
    return code, out.getvalue()


def test_json_schema_on_sample_queries():
    validator = jsonschema.Draft202012Validator(OUTPUT_SCHEMA)
    for q in SAMPLE_QUERIES:
        code, text = run(q, as_json=True)
        assert code == 0, text
        rec = json.loads(text)
        validator.validate(rec)
        assert rec["query"] == q or parse(rec["query"]) == parse(q)


def test_json_error_record_validates():
    code, text = run("lim P(2k..)", as_json=True)
    assert code == 2
    jsonschema.validate(json.loads(text), OUTPUT_SCHEMA)


def test_json_is_deterministic():
    prog = "\n".join(SAMPLE_QUERIES + ["check fdn 20", "check acont 200"])
    assert run(prog, as_json=True, seed=3) == run(prog, as_json=True, seed=3)


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.cofin"
    bad.write_text("assert dense? P(2k..)\n")
    good = tmp_path / "good.cofin"
    good.write_text("let A = 2k..\nassert dense? P(A) | P(!A)\nassert not (L <=? P(k+1..))\n")
    broken = tmp_path / "broken.cofin"
    broken.write_text("assert P(\n")
    out = io.StringIO()
    assert run_file(str(bad), out=out) == 1
    assert run_file(str(good), out=out) == 0
    assert run_file(str(broken), out=out) == 2
    assert run_file(str(tmp_path / "missing.cofin"), out=out) == 2
    assert run("") == (0, "")


def test_not_negates_answers():
    assert run("assert not (L <=? P(k+1..))")[0] == 0
    assert run("assert not (finite? {1})")[0] == 1
    assert run("assert neg (finite? {1})")[0] == 2


def test_repl_session():
    out = io.StringIO()
    assert repl(stdin=io.StringIO(""), out=out) == 0
    assert out.getvalue() == ""
    out = io.StringIO()
    code = repl(stdin=io.StringIO("let A = 2k..\n# note\nP(\ndense? P(A)\nassert finite? A\n"), out=out)
    assert code == 1
    assert "false" in out.getvalue()


def test_main_entry(capsys):
    assert main(["eval", "cofinite? !{0,2}"]) == 0
    assert capsys.readouterr().out.strip() == "true\n  evidence: Cont(!{0,2}) is InJnn".strip()
    assert main(["eval", "--json", "finite? {1}"]) == 0
    assert json.loads(capsys.readouterr().out)["answer"] is True
    assert main(["check", "clu1", "2"]) == 0
    assert main(["check", "sigma", "--seed", "9"]) == 0
    assert main(["bogus"]) == 2
    assert main(["eval", "P("]) == 2


def test_tour_script_passes():
    from pathlib import Path
    tour = Path(__file__).resolve().parent.parent / "scripts" / "tour.cofin"
    assert run_file(str(tour), out=io.StringIO()) == 0


def test_schema_file_matches_code():
    from pathlib import Path
    doc = Path(__file__).resolve().parent.parent / "docs" / "output.schema.json"
    assert json.loads(doc.read_text()) == OUTPUT_SCHEMA
