"""Minimal-edit search and slp-revision.

Candidate programs ``R`` for revising ``P`` by ``Q`` are represented by the
edit ``(D, E)`` with ``R = (P - D) | E``. An edit is a solution when
``R | Q`` has an answer set, and a candidate when it is a ``⊆``-minimal
solution over ``D | E``. Additions are drawn from a finite
:class:`RuleUniverse`; every search is exhaustive up to a cardinality bound
on ``|D| + |E|`` and reports whether that bound ever cut the search short.

Two search routes produce the same candidates:

``levelwise``
    Breadth-first over edit cardinality. A set is only evaluated when none
    of the solutions found at lower levels is contained in it.
``targeted``
    For each removal set ``D`` and each classical model ``Y`` of
    ``(P - D) | Q``, the additions that make ``Y`` an answer set are exactly
    the hitting sets of the SE pairs ``(X, Y)``, ``X < Y``, that must be
    killed. Candidates are the minimal edits across all ``(D, Y)``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from ._semask import SEMasks
from .program import Alphabet, EditSet, Program, Rule, edit_apply

log = logging.getLogger(__name__)

DEFAULT_BOUND = 4
DEFAULT_GEN_HEAD = 1
DEFAULT_GEN_BODY = 2
SEARCH_METHODS = ("targeted", "levelwise")


@dataclass(frozen=True)
class RuleUniverse:
    """The pool of rules a revision may add."""

    candidates: Program = Program()
    provenance: str = "user-supplied"

    def __post_init__(self):
        object.__setattr__(self, "candidates", Program(self.candidates))
        if self.provenance not in ("generated", "user-supplied"):
            raise ValueError(f"unknown provenance {self.provenance!r}")

    @classmethod
    def generate(cls, alphabet: Iterable[str], max_head: int = DEFAULT_GEN_HEAD,
                 max_body: int = DEFAULT_GEN_BODY) -> RuleUniverse:
        """All rules with ``|H| <= max_head`` and ``|B+| + |B-| <= max_body``.

        Each atom occupies at most one of head, positive and negative body.
        Facts ``a.`` and constraints ``:- a.`` are always included.
        """
        atoms = sorted(set(alphabet))
        rules = {Rule.fact(a) for a in atoms} | {Rule.constraint([a]) for a in atoms}
        for hsize in range(min(max_head, len(atoms)) + 1):
            for head in combinations(atoms, hsize):
                rest = [a for a in atoms if a not in head]
                for bsize in range(min(max_body, len(rest)) + 1):
                    for body in combinations(rest, bsize):
                        for signs in range(1 << bsize):
                            pos = [a for i, a in enumerate(body) if not signs >> i & 1]
                            neg = [a for i, a in enumerate(body) if signs >> i & 1]
                            if head or body:
                                rules.add(Rule(head, pos, neg))
        return cls(Program(rules), "generated")

    @classmethod
    def facts(cls, alphabet: Iterable[str]) -> RuleUniverse:
        return cls(Program(Rule.fact(a) for a in set(alphabet)))

    def bind(self, p: Program, q: Iterable[Rule] = ()) -> RuleUniverse:
        """Drop rules of ``p`` and ``q``; adding either is never minimal."""
        return replace(self, candidates=self.candidates - p - Program(q))

    def __len__(self) -> int:
        return len(self.candidates)


class SelectionStrategy(str, Enum):
    MIN_CARD = "min-card"
    PREFER_REMOVAL = "prefer-removal"
    PREFER_EXPANSION = "prefer-expansion"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CompatibleSet:
    """Minimal consistency-restoring edits of ``p`` with respect to ``q``.

    ``members`` are sorted by (size, number of removals, rule text).
    """

    kind: str
    members: tuple[EditSet, ...]
    complete_within_bound: bool
    bound_used: int | None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def programs(self, p: Program) -> frozenset[Program]:
        """The induced programs ``(p - D) | E``."""
        return frozenset(edit_apply(p, e) for e in self.members)


@dataclass(frozen=True)
class RevisionResult:
    """Outcome of ``slp_revise``: the revised program plus search status."""

    revised: Program
    selected: Program
    edit: EditSet | None
    candidates: CompatibleSet = field(repr=False)

    @property
    def complete(self) -> bool:
        return self.candidates.complete_within_bound

    @property
    def status(self) -> str:
        if self.edit is None and not self.complete:
            return "incomplete-search"
        return "complete" if self.complete else "truncated"


@lru_cache(maxsize=64)
def _masks(alphabet: Alphabet) -> SEMasks:
    return SEMasks(alphabet)


def _bits(v: int) -> list[int]:
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length() - 1)
        v ^= low
    return out


class _Search:
    def __init__(self, p: Program, q: Program, additions: Program, bound: int | None,
                 allow_removals: bool = True):
        self.p = p
        self.prules = list(p) if allow_removals else []
        self.urules = list(additions)
        self.np, self.nu = len(self.prules), len(self.urules)
        self.total = self.np + self.nu
        self.bound = bound
        self.masks = _masks(Alphabet.of(p, q, additions))
        m = self.masks
        self.qmask = m.program(q) & m.program(p - Program(self.prules))
        self.rmasks = [m.rule(r) for r in self.prules]
        self.umasks = [m.rule(r) for r in self.urules]
        self._pcache: dict[int, int] = {}

    def base(self, dbits: int) -> int:
        """SE mask of ``(P - D) | Q``."""
        v = self._pcache.get(dbits)
        if v is None:
            v = self.qmask
            for i in range(self.np):
                if not dbits >> i & 1:
                    v &= self.rmasks[i]
            self._pcache[dbits] = v
        return v

    def edit(self, bits: int) -> EditSet:
        rem = [self.prules[i] for i in _bits(bits) if i < self.np]
        add = [self.urules[i - self.np] for i in _bits(bits) if i >= self.np]
        return EditSet(Program(rem), Program(add))

    def _limit(self) -> int:
        return self.total if self.bound is None else min(self.bound, self.total)

    def levelwise(self) -> tuple[list[int], bool]:
        m, np_ = self.masks, self.np
        limit = self._limit()
        solutions: list[int] = []
        # (bits, last index, additions mask, addition indices)
        level = [(0, -1, m.top, ())]
        for k in range(limit + 1):
            alive = []
            for state in level:
                bits, _, emask, _ = state
                if m.consistent(self.base(bits & ((1 << np_) - 1)) & emask):
                    solutions.append(bits)
                else:
                    alive.append(state)
            if k == limit:
                complete = k == self.total or not any(
                    True for _ in self._extend(alive, solutions))
                return solutions, complete
            level = list(self._extend(alive, solutions))
            if not level:
                return solutions, True
        return solutions, True

    def _extend(self, alive, solutions):
        np_ = self.np
        for bits, last, emask, adds in alive:
            for j in range(last + 1, self.total):
                nb = bits | 1 << j
                if any(s & nb == s for s in solutions):
                    continue
                if j < np_:
                    yield nb, j, emask, adds
                    continue
                nadds = adds + (j - np_,)
                if self._redundant(bits & ((1 << np_) - 1), nadds):
                    continue
                yield nb, j, emask & self.umasks[j - np_], nadds

    def _redundant(self, dbits: int, adds: tuple[int, ...]) -> bool:
        # An addition whose mask already contains the rest never changes
        # consistency; every extension by further additions keeps it so.
        base = self.base(dbits)
        for e in adds:
            rest = base
            for f in adds:
                if f != e:
                    rest &= self.umasks[f]
            if rest & self.umasks[e] == rest:
                return True
        return False

    def targeted(self) -> tuple[list[int], bool]:
        m, np_ = self.masks, self.np
        limit_d = self.np if self.bound is None else min(self.bound, self.np)
        found: set[int] = set()
        truncated: list[int] = []
        ublocks: list[dict[int, int]] = [dict() for _ in range(self.nu)]

        def ublock(j: int, y: int) -> int:
            b = ublocks[j].get(y)
            if b is None:
                b = ublocks[j][y] = m.block(self.umasks[j], y)
            return b

        def contains_found(bits: int) -> bool:
            return any(s & bits == s for s in found)

        for dsize in range(limit_d + 1):
            for dcombo in combinations(range(np_), dsize):
                dbits = sum(1 << i for i in dcombo)
                if contains_found(dbits):
                    continue
                budget = None if self.bound is None else self.bound - dsize
                if dsize == limit_d and limit_d < np_:
                    truncated.append(dbits)
                base = self.base(dbits)
                for y in m.totals(base):
                    bad = m.block(base, y) & ~(1 << y)
                    if not bad:
                        found.add(dbits)
                        continue
                    if budget == 0:
                        truncated.append(dbits)
                        continue
                    pool = []
                    reach = 0
                    for j in range(self.nu):
                        b = ublock(j, y)
                        if b >> y & 1:
                            cover = bad & ~b
                            if cover:
                                pool.append((j, cover))
                                reach |= cover
                    if reach != bad:
                        continue
                    self._hit(dbits, bad, pool, budget, found, truncated)
        minimal = [s for s in found if not any(t != s and t & s == t for t in found)]
        complete = all(any(s & t == s for s in minimal) for t in truncated)
        return minimal, complete

    def _hit(self, dbits, bad, pool, budget, found, truncated):
        np_ = self.np
        seen: set[int] = set()

        def rec(ebits: int, covers: list[int], uncovered: int):
            bits = dbits | ebits
            if any(s & bits == s for s in found):
                return
            if not uncovered:
                found.add(bits)
                return
            if budget is not None and len(covers) >= budget:
                truncated.append(bits)
                return
            x = uncovered & -uncovered
            for j, cover in pool:
                if not cover & x:
                    continue
                nb = ebits | 1 << (np_ + j)
                if nb in seen:
                    continue
                seen.add(nb)
                ncovers = covers + [cover]
                if _irredundant(ncovers):
                    rec(nb, ncovers, uncovered & ~cover)

        rec(0, [], bad)


def _irredundant(covers: list[int]) -> bool:
    # A hitting set whose member adds nothing beyond the others is not minimal.
    for i, c in enumerate(covers):
        rest = 0
        for k, d in enumerate(covers):
            if k != i:
                rest |= d
        if c & ~rest == 0:
            return False
    return True


@lru_cache(maxsize=4096)
def _compatible(kind: str, p: Program, q: Program, pool: Program,
                bound: int | None, method: str) -> CompatibleSet:
    search = _Search(p, q, pool, bound, allow_removals=kind != "expansion")
    if method == "levelwise":
        bits, complete = search.levelwise()
    elif method == "targeted":
        bits, complete = search.targeted()
    else:
        raise ValueError(f"unknown search method {method!r}; expected one of {SEARCH_METHODS}")
    members = tuple(sorted(search.edit(b) for b in bits))
    log.debug("%s-compatible: %d members, complete=%s", kind, len(members), complete)
    return CompatibleSet(kind, members, complete, bound)


def _check_bound(bound):
    if bound is not None and bound < 0:
        raise ValueError("edit bound must be non-negative")
    return bound


def removal_compatible(p: Program, q: Program, method: str = "targeted") -> CompatibleSet:
    """Maximal subsets of ``p`` consistent with ``q``, as pure removals."""
    return _compatible("removal", Program(p), Program(q), Program(), len(p), method)


def expansion_compatible(p: Program, q: Program, universe: RuleUniverse | None = None,
                         bound: int | None = DEFAULT_BOUND,
                         method: str = "targeted") -> CompatibleSet:
    """Minimal supersets of ``p`` (within ``universe``) consistent with ``q``."""
    p, q = Program(p), Program(q)
    universe = default_universe(p, q) if universe is None else universe
    return _compatible("expansion", p, q, universe.bind(p, q).candidates,
                       _check_bound(bound), method)


def s_compatible(p: Program, q: Program, universe: RuleUniverse | None = None,
                 bound: int | None = DEFAULT_BOUND, method: str = "targeted") -> CompatibleSet:
    """Edits minimising ``p ^ R`` subject to ``R | q`` being consistent."""
    p, q = Program(p), Program(q)
    universe = default_universe(p, q) if universe is None else universe
    return _compatible("full", p, q, universe.bind(p, q).candidates,
                       _check_bound(bound), method)


def default_universe(p: Program, q: Program) -> RuleUniverse:
    return RuleUniverse.generate(p.atoms | q.atoms)


def choose(strategy: SelectionStrategy | str, candidates: CompatibleSet) -> EditSet | None:
    """The member picked by ``strategy``; ``None`` for an empty set."""
    strategy = SelectionStrategy(strategy)
    pool = list(candidates.members)
    if not pool:
        return None
    if strategy is SelectionStrategy.PREFER_REMOVAL:
        pool = [e for e in pool if not e.additions] or pool
    elif strategy is SelectionStrategy.PREFER_EXPANSION:
        pool = [e for e in pool if not e.removals] or pool
    return min(pool, key=EditSet.sort_key)


def select(strategy: SelectionStrategy | str, p: Program,
           candidates: CompatibleSet) -> Program:
    """Selection function: the chosen induced program, or ``p`` if none."""
    edit = choose(strategy, candidates)
    return Program(p) if edit is None else edit_apply(Program(p), edit)


def slp_revise(p: Program, q: Program, strategy: SelectionStrategy | str = "min-card",
               universe: RuleUniverse | None = None, bound: int | None = DEFAULT_BOUND,
               method: str = "targeted") -> RevisionResult:
    """Revise ``p`` by ``q``: the selected compatible program joined with ``q``."""
    p, q = Program(p), Program(q)
    cands = s_compatible(p, q, universe, bound, method)
    edit = choose(strategy, cands)
    selected = p if edit is None else edit_apply(p, edit)
    if edit is None and not cands.complete_within_bound:
        log.warning("no compatible program within %s edits; returning P | Q", bound)
    return RevisionResult(selected | q, selected, edit, cands)
