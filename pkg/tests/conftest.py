import pytest
from hypothesis import strategies as st

from slprev import Program, Rule
from slprev.syntax import parse_program

ATOMS = ("a", "b", "c")


def prog(text: str) -> Program:
    return parse_program(text)


@st.composite
def rules(draw, atoms=ATOMS):
    head = draw(st.frozensets(st.sampled_from(atoms), max_size=2))
    pos = draw(st.frozensets(st.sampled_from(atoms), max_size=2))
    neg = draw(st.frozensets(st.sampled_from(atoms), max_size=2))
    if not (head or pos or neg):
        head = frozenset({draw(st.sampled_from(atoms))})
    return Rule(head, pos, neg)


def programs(atoms=ATOMS, max_size=4):
    return st.frozensets(rules(atoms), max_size=max_size).map(Program)


@pytest.fixture
def teaching():
    return (prog("teach(john) :- prof(john), not admin(john). prof(john)."),
            prog(":- teach(john)."))


@pytest.fixture
def mixed():
    return (prog("a :- b, not c. b. e :- f, not g. f."), prog(":- a. :- e."))


_ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_criterion(name: str, passed: bool, detail: str = "") -> None:
    _ACCEPTANCE.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
