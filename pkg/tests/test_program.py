import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import prog, programs
from oracles import elementwise_sym_diff
from slprev import Alphabet, AlphabetTooLarge, EditSet, Program, Rule
from slprev.program import canonicalize, edit_apply, sym_diff


def test_rule_needs_an_atom():
    with pytest.raises(ValueError):
        Rule()


def test_rule_equality_is_structural():
    assert Rule("a", "bc", "d") == Rule(["a"], ["c", "b"], ["d"])
    assert Rule(["a"], ["b"]) != Rule(["a"], [], ["b"])


def test_rule_text():
    assert str(Rule.fact("a")) == "a."
    assert str(Rule.constraint(["a"])) == ":- a."
    assert str(Rule(["b", "a"], ["c"], ["d"])) == "a ; b :- c, not d."


@pytest.mark.parametrize("rules, expected", [
    (["a.", "a."], ["a."]),
    ([], []),
    (["b.", "a."], ["a.", "b."]),
])
@pytest.mark.filterwarnings("ignore::slprev.syntax.DuplicateRuleWarning")
def test_canonicalize(rules, expected):
    p = canonicalize(prog(" ".join(rules)))
    assert [str(r) for r in p] == expected


def test_canonicalize_idempotent(teaching):
    p, _ = teaching
    assert canonicalize(canonicalize(p)) == canonicalize(p) == p


@pytest.mark.parametrize("p, q, expected", [
    ("a.", "a.", ""),
    ("a.", "", "a."),
    ("a. b.", "b. c.", "a. c."),
])
def test_sym_diff(p, q, expected):
    p, q = prog(p), prog(q)
    assert sym_diff(p, q) == prog(expected)
    assert sym_diff(p, q) == elementwise_sym_diff(p, q)


@given(programs(), programs())
def test_sym_diff_symmetric(p, q):
    assert sym_diff(p, q) == sym_diff(q, p)
    assert sym_diff(p, p) == Program()
    assert sym_diff(p, q) == elementwise_sym_diff(p, q)


def test_edit_apply_examples():
    p = prog("b. f.")
    assert edit_apply(p, EditSet(prog("b."), prog("g."))) == prog("f. g.")
    assert edit_apply(p, EditSet()) == p
    assert edit_apply(prog("a."), EditSet(prog("a."))) == Program()


def test_edit_apply_rejects_illegal_edits():
    with pytest.raises(ValueError, match="not in program"):
        edit_apply(prog("a."), EditSet(prog("b.")))
    with pytest.raises(ValueError, match="already in program"):
        edit_apply(prog("a."), EditSet(additions=prog("a.")))
    with pytest.raises(ValueError):
        EditSet(prog("a."), prog("a."))


@given(programs(), st.data())
def test_edit_round_trip(p, data):
    removals = data.draw(st.frozensets(st.sampled_from(list(p)) if p else st.nothing()))
    additions = data.draw(programs()) - p
    e = EditSet(Program(removals), additions)
    r = edit_apply(p, e)
    diff = sym_diff(p, r)
    assert diff == e.changed
    assert (diff & p, diff - p) == (e.removals, e.additions)
    assert EditSet.between(p, r) == e


def test_alphabet_order_and_cap():
    assert Alphabet(("b", "a", "b")).atoms == ("a", "b")
    assert Alphabet.of(prog("x :- y."), ["a"]).atoms == ("a", "x", "y")
    with pytest.raises(AlphabetTooLarge):
        Alphabet(tuple(f"p{i}" for i in range(21)))


def test_program_set_algebra():
    p, q = prog("a. b."), prog("b. c.")
    assert p | q == prog("a. b. c.")
    assert p & q == prog("b.")
    assert p - q == prog("a.")
    assert p <= p | q and not p <= q
    assert hash(prog("a. b.")) == hash(prog("b. a."))
