"""Estimator-style wrapper around slp-revision.

A selection function, and hence a revision function, is always *for* a
fixed original program. ``fit`` binds that program; ``revise`` and
``transform`` then revise it by one or many incoming programs::

    >>> from slprev import SLPRevision
    >>> rev = SLPRevision(strategy="prefer-expansion", universe="facts")
    >>> rev = rev.fit("teach :- prof, not admin. prof.")
    >>> print(rev.revise(":- teach.").revised, end="")
    :- teach.
    admin.
    prof.
    teach :- prof, not admin.
"""
from __future__ import annotations

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .program import Program
from .revision import (DEFAULT_BOUND, DEFAULT_GEN_BODY, DEFAULT_GEN_HEAD, CompatibleSet,
                       RevisionResult, RuleUniverse, expansion_compatible,
                       removal_compatible, s_compatible, slp_revise)
from .validation import (check_bound, check_method, check_program, check_programs,
                         check_strategy, check_universe)

MODES = ("removal", "expansion", "full")


class SLPRevision(BaseEstimator):
    """Revise a fixed original program by incoming programs.

    Parameters
    ----------
    strategy : {"min-card", "prefer-removal", "prefer-expansion"}
        How a single compatible program is picked among the candidates.
    universe : None, "facts", RuleUniverse or program-like
        Rules that may be added. ``None`` generates all rules with at most
        ``gen_head`` head atoms and ``gen_body`` body literals over the atoms
        of both programs (plus ``extra_atoms``); ``"facts"`` uses only facts.
    gen_head, gen_body : int
        Shape limits for the generated universe.
    max_edits : int or None
        Bound on ``|D| + |E|`` for the edit search; ``None`` is unbounded.
    extra_atoms : tuple of str
        Atoms added to the session alphabet when generating a universe.
    search : {"targeted", "levelwise"}
        Search route; both return the same candidates.

    Attributes
    ----------
    original_ : Program
        The fitted original program.
    """

    def __init__(self, strategy="min-card", universe=None, gen_head=DEFAULT_GEN_HEAD,
                 gen_body=DEFAULT_GEN_BODY, max_edits=DEFAULT_BOUND, extra_atoms=(),
                 search="targeted"):
        self.strategy = strategy
        self.universe = universe
        self.gen_head = gen_head
        self.gen_body = gen_body
        self.max_edits = max_edits
        self.extra_atoms = extra_atoms
        self.search = search

    def fit(self, P, y=None):
        check_strategy(self.strategy)
        check_bound(self.max_edits)
        check_method(self.search)
        if self.universe not in (None, "facts"):
            self.universe_ = check_universe(self.universe)
        else:
            self.universe_ = self.universe
        self.original_ = check_program(P, name="P")
        return self

    def universe_for(self, Q) -> RuleUniverse:
        """The addition pool used when revising by ``Q``."""
        check_is_fitted(self, "original_")
        if isinstance(self.universe_, RuleUniverse):
            return self.universe_
        q = check_program(Q, name="Q")
        atoms = self.original_.atoms | q.atoms | set(self.extra_atoms)
        if self.universe_ == "facts":
            return RuleUniverse.facts(atoms)
        return RuleUniverse.generate(atoms, self.gen_head, self.gen_body)

    def compatible(self, Q, mode: str = "full") -> CompatibleSet:
        check_is_fitted(self, "original_")
        q = check_program(Q, name="Q")
        p = self.original_
        if mode == "removal":
            return removal_compatible(p, q, self.search)
        if mode == "expansion":
            return expansion_compatible(p, q, self.universe_for(q), self.max_edits, self.search)
        if mode == "full":
            return s_compatible(p, q, self.universe_for(q), self.max_edits, self.search)
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")

    def revise(self, Q) -> RevisionResult:
        check_is_fitted(self, "original_")
        q = check_program(Q, name="Q")
        return slp_revise(self.original_, q, check_strategy(self.strategy),
                          self.universe_for(q), self.max_edits, self.search)

    def transform(self, X) -> list[Program]:
        """Revise the original program by each program in ``X``."""
        return [self.revise(q).revised for q in check_programs(X, name="X")]

    def __call__(self, P, Q) -> Program:
        """Use the configuration as a two-argument revision function."""
        return self.revision_result(P, Q).revised

    def revision_result(self, P, Q) -> RevisionResult:
        est = self if _same_original(self, P) else self._refit(P)
        return est.revise(Q)

    def candidate_set(self, P, Q) -> CompatibleSet:
        est = self if _same_original(self, P) else self._refit(P)
        return est.compatible(Q)

    def _refit(self, P) -> SLPRevision:
        return type(self)(**self.get_params()).fit(P)


def _same_original(est: SLPRevision, P) -> bool:
    return hasattr(est, "original_") and isinstance(P, Program) and est.original_ == P
