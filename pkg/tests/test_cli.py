import json
import subprocess
import sys
from pathlib import Path

import pytest

from slprev.cli import run

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def cli(capsys, *argv):
    args = [str(FIXTURES / a) if a.endswith(".lp") else a for a in argv]
    code = run(args)
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN = {
    ("answer-sets", "teaching_P.lp"): "{prof(john), teach(john)}\n",
    ("answer-sets", "teaching_conflict.lp"): "(none)\n",
    ("answer-sets", "teaching_restored.lp"): "{admin(john), prof(john)}\n",
    ("answer-sets", "empty.lp"): "{}\n",
    ("models", "teaching_P.lp"): (
        "{admin(john), prof(john)}\n{prof(john), teach(john)}\n"
        "{admin(john), prof(john), teach(john)}\n"),
    ("se-models", "weak_conflict_Q.lp"): "({}, {b})\n({b}, {b})\n",
    ("se-models", "expansion_empty_P.lp", "--atoms", "b"):
        "({a}, {a})\n({a}, {a, b})\n({a, b}, {a, b})\n",
    ("m-consistent", "weak_conflict_Q.lp"): "m-consistent\n",
    ("compatible", "teaching_P.lp", "teaching_Q.lp", "--universe", "facts"): (
        "mode: full\ncomplete: true (bound 4)\ncandidates: 3\n"
        "[1] remove: -  add: admin(john).\n"
        "[2] remove: prof(john).  add: -\n"
        "[3] remove: teach(john) :- prof(john), not admin(john).  add: -\n"),
    ("compatible", "--mode", "expansion", "expansion_empty_P.lp", "expansion_empty_Q.lp"):
        "mode: expansion\ncomplete: true (bound 4)\ncandidates: 0\n",
    ("compatible", "--mode", "removal", "mixed_P.lp", "mixed_Q.lp"): (
        "mode: removal\ncomplete: true (bound 4)\ncandidates: 4\n"
        "[1] remove: a :- b, not c. e :- f, not g.  add: -\n"
        "[2] remove: a :- b, not c. f.  add: -\n"
        "[3] remove: b. e :- f, not g.  add: -\n"
        "[4] remove: b. f.  add: -\n"),
    ("compatible", "--mode", "expansion", "maxichoice_P.lp", "maxichoice_Q.lp",
     "--universe", "facts"): (
        "mode: expansion\ncomplete: true (bound 4)\ncandidates: 2\n"
        "[1] remove: -  add: b.\n[2] remove: -  add: c.\n"),
    ("revise", "teaching_P.lp", "teaching_Q.lp", "--strategy", "prefer-expansion"): (
        "% strategy: prefer-expansion  status: complete\n% removed: -\n% added: admin(john).\n"
        ":- teach(john).\nadmin(john).\nprof(john).\n"
        "teach(john) :- prof(john), not admin(john).\n"),
    ("revise", "teaching_P.lp", "teaching_admin.lp"): (
        "% strategy: min-card  status: complete\n% removed: -\n% added: -\n"
        "admin(john).\nprof(john).\nteach(john) :- prof(john), not admin(john).\n"),
    ("revise", "weak_conflict_P.lp", "weak_conflict_Q.lp"): (
        "% strategy: min-card  status: complete\n% removed: -\n% added: b.\n"
        "a.\nb.\nb :- not b.\n"),
    ("revise", "uniformity_P.lp", "uniformity_Q.lp"): (
        "% strategy: min-card  status: complete\n% removed: :- a.\n% added: -\na.\n"),
    ("revise", "uniformity_P.lp", "uniformity_R.lp"): (
        "% strategy: min-card  status: complete\n% removed: :- a.\n% added: -\na :- b.\nb.\n"),
    ("revise", "expansion_empty_P.lp", "m_inconsistent_Q.lp"): (
        "% strategy: min-card  status: complete\n% removed: -\n% added: -\n:- a.\na.\n"),
    ("check-postulates", "mixed_P.lp", "mixed_Q.lp"): (
        "s*s   pass\ns*c   pass\ns*f   pass (vacuous): Q is m-consistent\n"
        "s*rr  pass (vacuous)\ns*er  pass\ns*mr  pass (vacuous)\n"
        "s*u   pass (vacuous): no second revising program\nall postulates pass\n"),
    ("check-postulates", "uniformity_P.lp", "uniformity_Q.lp", "uniformity_R.lp"): (
        "s*s   pass\ns*c   pass\ns*f   pass (vacuous): Q is m-consistent\n"
        "s*rr  pass\ns*er  pass (vacuous)\ns*mr  pass (vacuous)\ns*u   pass\n"
        "all postulates pass\n"),
}


@pytest.mark.parametrize("argv", list(GOLDEN), ids=lambda a: " ".join(a))
def test_golden(capsys, argv):
    code, out, _ = cli(capsys, *argv)
    assert code == 0
    assert out == GOLDEN[argv]


def test_every_fixture_is_exercised():
    used = {a for argv in GOLDEN for a in argv if a.endswith(".lp")}
    used |= {"teaching_conflict.lp", "m_inconsistent_Q.lp"}
    assert used == {p.name for p in FIXTURES.glob("*.lp")}


@pytest.mark.parametrize("argv, code, text", [
    (("consistent", "weak_conflict_Q.lp"), 1, "not consistent\n"),
    (("consistent", "teaching_conflict.lp"), 1, "not consistent\n"),
    (("consistent", "teaching_P.lp"), 0, "consistent\n"),
    (("m-consistent", "m_inconsistent_Q.lp"), 1, "not m-consistent\n"),
])
def test_boolean_exit_codes(capsys, argv, code, text):
    assert cli(capsys, *argv)[:2] == (code, text)


def test_failing_postulates_exit_one(capsys, tmp_path, monkeypatch):
    import slprev.estimator as est
    original = est.SLPRevision.revise

    def union(self, Q):
        res = original(self, Q)
        return type(res)(self.original_ | res.revised, res.selected, res.edit, res.candidates)

    monkeypatch.setattr(est.SLPRevision, "revise", union)
    code, out, _ = cli(capsys, "check-postulates", "teaching_P.lp", "teaching_Q.lp",
                       "--universe", "facts", "--strategy", "prefer-removal")
    assert code == 1 and "fail" in out


@pytest.mark.parametrize("argv", [
    ("bogus",),
    ("revise", "nope.lp", "teaching_Q.lp"),
    ("revise", "teaching_P.lp", "teaching_Q.lp", "--max-edits", "-1"),
    ("revise", "teaching_P.lp", "teaching_Q.lp", "--strategy", "best"),
    ("answer-sets",),
])
def test_usage_errors_exit_two(capsys, argv):
    assert cli(capsys, *argv)[0] == 2


def test_parse_error_reports_span(capsys, tmp_path):
    bad = tmp_path / "bad.lp"
    bad.write_text("a :- .\n")
    code, _, err = cli(capsys, "answer-sets", str(bad))
    assert code == 2
    assert f"{bad}:1:6: expected a body literal" in err


def test_duplicate_rule_warning_on_stderr(capsys, tmp_path):
    dup = tmp_path / "dup.lp"
    dup.write_text("a.\na.\n")
    code, out, err = cli(capsys, "answer-sets", str(dup))
    assert code == 0 and out == "{a}\n" and "duplicate rule" in err


def test_json_schema(capsys):
    code, out, _ = cli(capsys, "--json", "revise", "teaching_P.lp", "teaching_Q.lp",
                       "--strategy", "prefer-expansion", "--universe", "facts")
    data = json.loads(out)
    assert code == 0
    assert data["status"] == "complete" and data["complete"] is True
    assert data["edit"] == {"removals": [], "additions": [
        {"head": ["admin(john)"], "pos_body": [], "neg_body": []}]}
    assert {"head": [], "pos_body": ["teach(john)"], "neg_body": []} in data["revised"]


@pytest.mark.parametrize("argv", [
    ("answer-sets", "teaching_P.lp"),
    ("se-models", "weak_conflict_Q.lp"),
    ("compatible", "mixed_P.lp", "mixed_Q.lp", "--universe", "facts"),
    ("check-postulates", "uniformity_P.lp", "uniformity_Q.lp", "uniformity_R.lp"),
    ("sweep", "--seeds", "2"),
])
def test_json_is_stable(capsys, argv):
    first = cli(capsys, "--json", *argv)[1]
    second = cli(capsys, *argv, "--json")[1]
    assert first == second
    json.loads(first)


def test_json_interpretations(capsys):
    data = json.loads(cli(capsys, "se-models", "weak_conflict_Q.lp", "--json")[1])
    assert data == {"alphabet": ["b"], "se_models": [[[], ["b"]], [["b"], ["b"]]]}
    data = json.loads(cli(capsys, "answer-sets", "empty.lp", "--json")[1])
    assert data["answer_sets"] == [[]]


def test_sweep_command(capsys):
    code, out, _ = cli(capsys, "sweep", "--seeds", "3", "--strategies", "min-card")
    assert code == 0
    assert "failures: 0" in out and "reconstruction failures: 0" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "slprev", "answer-sets",
                           str(FIXTURES / "teaching_P.lp")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "{prof(john), teach(john)}\n"
