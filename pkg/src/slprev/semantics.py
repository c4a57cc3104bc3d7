"""Brute-force model theory for ground disjunctive programs.

All functions enumerate interpretations over an explicit alphabet, which
defaults to the atoms of the program(s) involved. Pass a shared alphabet
whenever model sets of different programs are compared.
"""
from __future__ import annotations

from itertools import chain, combinations
from typing import Iterable, NamedTuple

from .program import Alphabet, Program, Rule

Interpretation = frozenset


class SEInterpretation(NamedTuple):
    x: frozenset[str]
    y: frozenset[str]


def _alphabet(alphabet: Alphabet | Iterable[str] | None, *programs: Program) -> Alphabet:
    if alphabet is None:
        return Alphabet.of(*programs)
    if isinstance(alphabet, Alphabet):
        extra = set().union(*(p.atoms for p in programs)) - set(alphabet.atoms)
        return alphabet.union(extra) if extra else alphabet
    return Alphabet.of(alphabet, *programs)


def subsets(atoms: Iterable[str]) -> Iterable[frozenset[str]]:
    """All subsets of ``atoms``, by size then lexicographically."""
    atoms = sorted(atoms)
    return (frozenset(c) for c in chain.from_iterable(
        combinations(atoms, k) for k in range(len(atoms) + 1)))


def satisfies(y: Iterable[str], rule: Rule) -> bool:
    """Classical truth of ``rule`` in ``y``, reading ``not`` as negation."""
    y = frozenset(y)
    body_holds = rule.pos_body <= y and not (rule.neg_body & y)
    return not body_holds or bool(rule.head & y)


def is_model(y: Iterable[str], p: Iterable[Rule]) -> bool:
    y = frozenset(y)
    return all(satisfies(y, r) for r in p)


def classical_models(p: Program, alphabet=None) -> frozenset[frozenset[str]]:
    sigma = _alphabet(alphabet, p)
    return frozenset(y for y in subsets(sigma) if is_model(y, p))


def reduct(p: Program, y: Iterable[str]) -> Program:
    """Gelfond-Lifschitz reduct: drop rules blocked by ``y``, strip ``not``.

    A constraint whose body is purely negative reduces to the empty rule.
    """
    y = frozenset(y)
    return Program(Rule._raw(r.head, r.pos_body) for r in p if not (r.neg_body & y))


def is_answer_set(y: Iterable[str], p: Program) -> bool:
    y = frozenset(y)
    red = reduct(p, y)
    if not is_model(y, red):
        return False
    return not any(is_model(x, red) for x in subsets(y) if x != y)


def answer_sets(p: Program, alphabet=None) -> frozenset[frozenset[str]]:
    sigma = _alphabet(alphabet, p)
    return frozenset(y for y in subsets(sigma) if is_answer_set(y, p))


def se_models(p: Program, alphabet=None) -> frozenset[SEInterpretation]:
    sigma = _alphabet(alphabet, p)
    out = []
    for y in subsets(sigma):
        if not is_model(y, p):
            continue
        red = reduct(p, y)
        out.extend(SEInterpretation(x, y) for x in subsets(y) if is_model(x, red))
    return frozenset(out)


def answer_sets_from_se(se: Iterable[SEInterpretation]) -> frozenset[frozenset[str]]:
    """Recover answer sets as the total SE models with no smaller partner."""
    se = frozenset(se)
    tops = {m.y for m in se if m.x == m.y}
    return frozenset(y for y in tops if not any(m.y == y and m.x < y for m in se))


def is_consistent(p: Program) -> bool:
    """True iff ``p`` has an answer set."""
    for y in subsets(Alphabet.of(p)):
        if is_answer_set(y, p):
            return True
    return False


def is_m_consistent(p: Program) -> bool:
    """True iff ``p`` has an SE model, i.e. a classical model."""
    return any(is_model(y, p) for y in subsets(Alphabet.of(p)))


def strongly_equivalent(p: Program, q: Program, alphabet=None) -> bool:
    sigma = _alphabet(alphabet, p, q)
    return se_models(p, sigma) == se_models(q, sigma)
