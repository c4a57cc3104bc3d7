"""Value types for ground disjunctive programs.

Atoms are plain strings (ground symbols such as ``prof(john)``). A rule is
a triple of atom sets ``head <- pos_body, not neg_body`` and a program is a
finite set of rules. Everything here is immutable and hashable.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Iterator

MAX_ATOMS = 20


class AlphabetTooLarge(ValueError):
    """Raised when brute-force enumeration over the alphabet would explode."""


@dataclass(frozen=True, init=False)
class Rule:
    """A ground rule ``h1 ; ... ; hm :- b1, ..., bn, not c1, ..., not co``.

    An empty head is a constraint (the empty disjunction, i.e. falsity).
    """

    head: frozenset[str]
    pos_body: frozenset[str]
    neg_body: frozenset[str]

    def __init__(self, head: Iterable[str] = (), pos_body: Iterable[str] = (),
                 neg_body: Iterable[str] = ()):
        object.__setattr__(self, "head", frozenset(head))
        object.__setattr__(self, "pos_body", frozenset(pos_body))
        object.__setattr__(self, "neg_body", frozenset(neg_body))
        if not (self.head or self.pos_body or self.neg_body):
            raise ValueError("a rule needs at least one atom in its head or body")

    @classmethod
    def _raw(cls, head, pos_body, neg_body=()) -> Rule:
        # Bypasses the non-emptiness check: the reduct of ``:- not a.`` is
        # the empty rule, which no interpretation satisfies.
        r = object.__new__(cls)
        object.__setattr__(r, "head", frozenset(head))
        object.__setattr__(r, "pos_body", frozenset(pos_body))
        object.__setattr__(r, "neg_body", frozenset(neg_body))
        return r

    @classmethod
    def fact(cls, atom: str) -> Rule:
        return cls(head=(atom,))

    @classmethod
    def constraint(cls, pos: Iterable[str] = (), neg: Iterable[str] = ()) -> Rule:
        return cls(pos_body=pos, neg_body=neg)

    @property
    def atoms(self) -> frozenset[str]:
        return self.head | self.pos_body | self.neg_body

    @property
    def is_fact(self) -> bool:
        return len(self.head) == 1 and not self.pos_body and not self.neg_body

    @property
    def is_constraint(self) -> bool:
        return not self.head

    def sort_key(self) -> tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]:
        return (tuple(sorted(self.head)), tuple(sorted(self.pos_body)),
                tuple(sorted(self.neg_body)))

    def __lt__(self, other: Rule) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        head = " ; ".join(sorted(self.head))
        body = [*sorted(self.pos_body), *(f"not {a}" for a in sorted(self.neg_body))]
        if not body and head:
            return f"{head}."
        if not head:
            return f":- {', '.join(body)}."
        return f"{head} :- {', '.join(body)}."

    def __repr__(self) -> str:
        return f"Rule({str(self)!r})"


class Program:
    """A finite set of rules, iterated in canonical order.

    Supports the usual set algebra (``|``, ``&``, ``-``, ``^``, ``<=``) with
    results coerced back to :class:`Program`.
    """

    __slots__ = ("rules", "_sorted", "_hash")

    def __init__(self, rules: Iterable[Rule] = ()):
        rules = frozenset(rules)
        for r in rules:
            if not isinstance(r, Rule):
                raise TypeError(f"expected Rule, got {type(r).__name__}")
        self.rules: frozenset[Rule] = rules
        self._sorted: tuple[Rule, ...] | None = None
        self._hash: int | None = None

    @property
    def sorted_rules(self) -> tuple[Rule, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.rules))
        return self._sorted

    @property
    def atoms(self) -> frozenset[str]:
        return frozenset(chain.from_iterable(r.atoms for r in self.rules))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.sorted_rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, rule: object) -> bool:
        return rule in self.rules

    def __bool__(self) -> bool:
        return bool(self.rules)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Program):
            return self.rules == other.rules
        if isinstance(other, (set, frozenset)):
            return self.rules == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rules)
        return self._hash

    def __lt__(self, other: Program) -> bool:
        return self.sorted_rules < other.sorted_rules

    def __or__(self, other: Iterable[Rule]) -> Program:
        return Program(self.rules | _as_ruleset(other))

    def __and__(self, other: Iterable[Rule]) -> Program:
        return Program(self.rules & _as_ruleset(other))

    def __sub__(self, other: Iterable[Rule]) -> Program:
        return Program(self.rules - _as_ruleset(other))

    def __xor__(self, other: Iterable[Rule]) -> Program:
        return Program(self.rules ^ _as_ruleset(other))

    def __le__(self, other: Iterable[Rule]) -> bool:
        return self.rules <= _as_ruleset(other)

    def __ge__(self, other: Iterable[Rule]) -> bool:
        return self.rules >= _as_ruleset(other)

    def issubset(self, other: Iterable[Rule]) -> bool:
        return self <= other

    def __str__(self) -> str:
        return "".join(f"{r}\n" for r in self)

    def __repr__(self) -> str:
        return "Program({" + " ".join(str(r) for r in self) + "})"


def _as_ruleset(rules: Iterable[Rule]) -> frozenset[Rule]:
    if isinstance(rules, Program):
        return rules.rules
    return frozenset(rules)


@dataclass(frozen=True)
class Alphabet:
    """Finite, lexicographically ordered set of atoms."""

    atoms: tuple[str, ...]

    def __post_init__(self):
        ordered = tuple(sorted(set(self.atoms)))
        if len(ordered) > MAX_ATOMS:
            raise AlphabetTooLarge(
                f"alphabet has {len(ordered)} atoms; exhaustive enumeration is "
                f"capped at {MAX_ATOMS}")
        object.__setattr__(self, "atoms", ordered)

    @classmethod
    def of(cls, *sources: Iterable[Rule] | Iterable[str]) -> Alphabet:
        """Collect the atoms of several programs, rule pools or atom lists."""
        atoms: set[str] = set()
        for src in sources:
            for item in src:
                atoms |= item.atoms if isinstance(item, Rule) else {item}
        return cls(tuple(atoms))

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self.atoms

    def union(self, other: Iterable[str]) -> Alphabet:
        return Alphabet(self.atoms + tuple(other))


@dataclass(frozen=True)
class EditSet:
    """Removals ``D`` and additions ``E`` turning ``P`` into ``(P - D) | E``."""

    removals: Program = Program()
    additions: Program = Program()

    def __post_init__(self):
        object.__setattr__(self, "removals", Program(self.removals))
        object.__setattr__(self, "additions", Program(self.additions))
        if self.removals.rules & self.additions.rules:
            raise ValueError("a rule cannot be both removed and added")

    @classmethod
    def between(cls, p: Program, r: Program) -> EditSet:
        """The edit whose application to ``p`` yields ``r``."""
        return cls(p - r, r - p)

    @property
    def changed(self) -> Program:
        return self.removals | self.additions

    def __len__(self) -> int:
        return len(self.removals) + len(self.additions)

    def sort_key(self):
        return (len(self), len(self.removals),
                tuple(r.sort_key() for r in self.changed))

    def __lt__(self, other: EditSet) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        rem = " ".join(str(r) for r in self.removals) or "-"
        add = " ".join(str(r) for r in self.additions) or "-"
        return f"remove: {rem}  add: {add}"


def canonicalize(p: Iterable[Rule]) -> Program:
    """Deduplicate and order rules; idempotent."""
    return p if isinstance(p, Program) else Program(p)


def sym_diff(p: Iterable[Rule], q: Iterable[Rule]) -> Program:
    """``(p - q) | (q - p)``."""
    return Program(_as_ruleset(p) ^ _as_ruleset(q))


def edit_apply(p: Program, edit: EditSet) -> Program:
    """Apply ``edit`` to ``p``, rejecting edits that are illegal for ``p``."""
    if not edit.removals <= p:
        extra = edit.removals - p
        raise ValueError(f"removals not in program: {' '.join(map(str, extra))}")
    clash = edit.additions & p
    if clash:
        raise ValueError(f"additions already in program: {' '.join(map(str, clash))}")
    return (p - edit.removals) | edit.additions
