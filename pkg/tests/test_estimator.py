from pathlib import Path

import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from conftest import prog
from slprev import Program, RuleUniverse, SLPRevision

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def test_params_round_trip():
    est = SLPRevision(strategy="prefer-removal", max_edits=2)
    params = est.get_params()
    assert params["strategy"] == "prefer-removal" and params["max_edits"] == 2
    twin = clone(est)
    assert twin.get_params() == params and twin is not est
    assert est.set_params(search="levelwise").search == "levelwise"


def test_not_fitted():
    with pytest.raises(NotFittedError):
        SLPRevision().revise(":- a.")


@pytest.mark.parametrize("params, match", [
    ({"strategy": "best"}, "unknown strategy"),
    ({"max_edits": -1}, "max_edits"),
    ({"max_edits": 1.5}, "max_edits"),
    ({"search": "bfs"}, "search method"),
])
def test_fit_validates(params, match):
    with pytest.raises(ValueError, match=match):
        SLPRevision(**params).fit("a.")


def test_fit_accepts_program_like_inputs(teaching):
    p, _ = teaching
    for obj in (p, str(p), list(p), FIXTURES / "teaching_P.lp"):
        assert SLPRevision().fit(obj).original_ == p


def test_fit_rejects_garbage():
    with pytest.raises(TypeError):
        SLPRevision().fit(3)
    with pytest.raises(TypeError):
        SLPRevision().fit([1, 2])


def test_revise_and_transform(teaching):
    p, q = teaching
    est = SLPRevision(strategy="prefer-expansion", universe="facts").fit(p)
    res = est.revise(q)
    assert res.revised == p | q | prog("admin(john).")
    assert est.transform([q, prog("admin(john).")]) == [res.revised, p | prog("admin(john).")]


def test_transform_needs_a_sequence(teaching):
    p, q = teaching
    with pytest.raises(TypeError, match="single program"):
        SLPRevision().fit(p).transform(q)


def test_universe_options(teaching):
    p, q = teaching
    facts = SLPRevision(universe="facts").fit(p).universe_for(q)
    assert all(r.is_fact for r in facts.candidates) and len(facts) == 3
    gen = SLPRevision().fit(p).universe_for(q)
    assert gen.provenance == "generated" and facts.candidates <= gen.candidates
    custom = SLPRevision(universe="admin(john).").fit(p).universe_for(q)
    assert custom.candidates == prog("admin(john).")
    wider = SLPRevision(universe="facts", extra_atoms=("z",)).fit(p).universe_for(q)
    assert prog("z.") <= wider.candidates


def test_compatible_modes(mixed):
    p, q = mixed
    est = SLPRevision(universe="facts").fit(p)
    removal = est.compatible(q, "removal")
    expansion = est.compatible(q, "expansion")
    full = est.compatible(q)
    assert all(not e.additions for e in removal)
    assert all(not e.removals for e in expansion)
    assert set(removal) | set(expansion) <= set(full)
    with pytest.raises(ValueError, match="unknown mode"):
        est.compatible(q, "both")


def test_oracle_interface_refits(teaching):
    p, q = teaching
    est = SLPRevision(universe="facts").fit(prog("z."))
    assert est(p, q) == SLPRevision(universe="facts").fit(p).revise(q).revised
    assert est.original_ == prog("z.")
    assert len(est.candidate_set(p, q)) == 3


def test_search_routes_agree(teaching):
    p, q = teaching
    a = SLPRevision(universe="facts", search="targeted").fit(p).compatible(q)
    b = SLPRevision(universe="facts", search="levelwise").fit(p).compatible(q)
    assert a.members == b.members


def test_universe_object_is_used_verbatim(teaching):
    p, q = teaching
    u = RuleUniverse(prog("admin(john). other."))
    est = SLPRevision(universe=u).fit(p)
    assert est.universe_for(q) is u
    assert est.revise(q).revised != Program()
