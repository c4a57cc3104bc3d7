"""Executable checks for the slp-revision postulates.

A revision oracle is any callable ``o(P, Q) -> Program``. Oracles that also
expose ``revision_result(P, Q)`` and ``candidate_set(P, Q)`` (such as a
configured :class:`~slprev.estimator.SLPRevision`) let the checkers tell a
genuine failure from a search that was cut short by its edit bound.

Postulates, for a revision ``P * Q``:

=====  ==========================================================
s*s    ``Q`` is contained in ``P * Q``
s*c    if ``Q`` is m-consistent, ``P * Q`` is consistent
s*f    if ``Q`` is m-inconsistent, ``P * Q == P | Q``
s*rr   re-adding removed rules makes ``P * Q`` inconsistent
s*er   dropping added rules makes ``P * Q`` inconsistent
s*mr   doing both at once makes ``P * Q`` inconsistent
s*u    equal candidate sets for ``Q`` and ``R`` give equal changes
=====  ==========================================================
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import chain, combinations
from typing import Callable, Iterable, Sequence

from .program import EditSet, Program, Rule
from .revision import CompatibleSet, RuleUniverse, SelectionStrategy, s_compatible
from .semantics import is_consistent, is_m_consistent
from .validation import check_program

RevisionOracle = Callable[[Program, Program], Program]

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
POSTULATES = ("s*s", "s*c", "s*f", "s*rr", "s*er", "s*mr", "s*u")
MAX_RELEVANCE_RULES = 12


@dataclass(frozen=True)
class Verdict:
    postulate: str
    status: str
    witness: object = None
    vacuous: bool = False
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __str__(self) -> str:
        text = f"{self.postulate:<5} {self.status}"
        if self.vacuous:
            text += " (vacuous)"
        if self.note:
            text += f": {self.note}"
        return text


@dataclass
class PostulateReport:
    p: Program
    q: Program
    revised: Program
    verdicts: dict[str, Verdict]
    r: Program | None = None

    @property
    def ok(self) -> bool:
        return not any(v.status == FAIL for v in self.verdicts.values())

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts.values() if v.status == FAIL]

    def __str__(self) -> str:
        return "\n".join(str(self.verdicts[k]) for k in POSTULATES if k in self.verdicts)


def _revise(o: RevisionOracle, p: Program, q: Program) -> tuple[Program, bool | None]:
    if hasattr(o, "revision_result"):
        res = o.revision_result(p, q)
        return res.revised, res.complete
    return check_program(o(p, q), name="oracle result"), None


def _nonempty_subsets(rules: Program) -> Iterable[Program]:
    items = list(rules)
    return (Program(c) for c in chain.from_iterable(
        combinations(items, k) for k in range(1, len(items) + 1)))


def _capped(*parts: Program) -> None:
    size = sum(len(x) for x in parts)
    if size > MAX_RELEVANCE_RULES:
        raise ValueError(f"relevance check over {size} changed rules exceeds the "
                         f"exhaustive cap of {MAX_RELEVANCE_RULES}")


def check_success(o: RevisionOracle, p, q) -> Verdict:
    p, q = check_program(p), check_program(q)
    res, _ = _revise(o, p, q)
    missing = q - res
    if missing:
        return Verdict("s*s", FAIL, missing, note=f"missing {len(missing)} rule(s) of Q")
    return Verdict("s*s", PASS, vacuous=not q)


def check_consistency(o: RevisionOracle, p, q) -> Verdict:
    p, q = check_program(p), check_program(q)
    if not is_m_consistent(q):
        return Verdict("s*c", PASS, vacuous=True, note="Q is m-inconsistent")
    res, complete = _revise(o, p, q)
    if is_consistent(res):
        return Verdict("s*c", PASS)
    if complete is False:
        return Verdict("s*c", INCONCLUSIVE, res, note="edit search truncated by its bound")
    return Verdict("s*c", FAIL, res, note="result has no answer set")


def check_failure(o: RevisionOracle, p, q) -> Verdict:
    p, q = check_program(p), check_program(q)
    if is_m_consistent(q):
        return Verdict("s*f", PASS, vacuous=True, note="Q is m-consistent")
    res, _ = _revise(o, p, q)
    if res == p | q:
        return Verdict("s*f", PASS)
    return Verdict("s*f", FAIL, res, note="result differs from P | Q")


def check_removal_relevance(o: RevisionOracle, p, q) -> Verdict:
    p, q = check_program(p), check_program(q)
    res, _ = _revise(o, p, q)
    removed = p - res
    if not removed:
        return Verdict("s*rr", PASS, vacuous=True)
    _capped(removed)
    for back in _nonempty_subsets(removed):
        if is_consistent(res | back):
            return Verdict("s*rr", FAIL, back, note="re-adding these rules stays consistent")
    return Verdict("s*rr", PASS)


def check_expansion_relevance(o: RevisionOracle, p, q) -> Verdict:
    p, q = check_program(p), check_program(q)
    res, _ = _revise(o, p, q)
    added = res - (p | q)
    if not added:
        return Verdict("s*er", PASS, vacuous=True)
    _capped(added)
    for drop in _nonempty_subsets(added):
        if is_consistent(res - drop):
            return Verdict("s*er", FAIL, drop, note="dropping these rules stays consistent")
    return Verdict("s*er", PASS)


def check_mixed_relevance(o: RevisionOracle, p, q) -> Verdict:
    p, q = check_program(p), check_program(q)
    res, _ = _revise(o, p, q)
    removed, added = p - res, res - (p | q)
    if not removed or not added:
        return Verdict("s*mr", PASS, vacuous=True)
    _capped(removed, added)
    for back in _nonempty_subsets(removed):
        for drop in _nonempty_subsets(added):
            if is_consistent((res | back) - drop):
                return Verdict("s*mr", FAIL, EditSet(drop, back),
                               note="swapping these rules back stays consistent")
    return Verdict("s*mr", PASS)


def _candidates(o, p: Program, q: Program, universe, bound) -> CompatibleSet:
    if hasattr(o, "candidate_set"):
        return o.candidate_set(p, q)
    return s_compatible(p, q, universe, bound)


def check_uniformity(o: RevisionOracle, p, q, r, universe: RuleUniverse | None = None,
                     bound: int | None = 4) -> Verdict:
    """``universe`` and ``bound`` are only used for oracles without ``candidate_set``."""
    p, q, r = check_program(p), check_program(q), check_program(r)
    cq, cr = _candidates(o, p, q, universe, bound), _candidates(o, p, r, universe, bound)
    if not (cq.complete_within_bound and cr.complete_within_bound):
        return Verdict("s*u", INCONCLUSIVE, note="candidate enumeration truncated")
    if cq.programs(p) != cr.programs(p):
        return Verdict("s*u", PASS, vacuous=True, note="candidate sets differ")
    res_q, _ = _revise(o, p, q)
    res_r, _ = _revise(o, p, r)
    removed_q, removed_r = p - res_q, p - res_r
    added_q, added_r = res_q - (p | q), res_r - (p | r)
    if removed_q != removed_r or added_q != added_r:
        return Verdict("s*u", FAIL, (EditSet(removed_q, added_q), EditSet(removed_r, added_r)),
                       note="equal candidate sets but different changes")
    return Verdict("s*u", PASS)


def check_postulates(o: RevisionOracle, p, q, r=None, universe: RuleUniverse | None = None,
                     bound: int | None = 4) -> PostulateReport:
    p, q = check_program(p), check_program(q)
    verdicts = [check_success(o, p, q), check_consistency(o, p, q), check_failure(o, p, q),
                check_removal_relevance(o, p, q), check_expansion_relevance(o, p, q),
                check_mixed_relevance(o, p, q)]
    if r is None:
        verdicts.append(Verdict("s*u", PASS, vacuous=True, note="no second revising program"))
    else:
        r = check_program(r)
        verdicts.append(check_uniformity(o, p, q, r, universe, bound))
    res, _ = _revise(o, p, q)
    return PostulateReport(p, q, res, {v.postulate: v for v in verdicts}, r)


def reconstruct_gamma(o: RevisionOracle, p, q) -> Program:
    """Recover the selected program from a revision: ``(o & P) | (o - Q)``."""
    p, q = check_program(p), check_program(q)
    res, _ = _revise(o, p, q)
    return (res & p) | (res - q)


def random_program(seed: int, alphabet: Sequence[str], max_rules: int,
                   max_body: int = 2) -> Program:
    """A seeded random program with between 1 and ``max_rules`` rules."""
    if max_rules <= 0:
        return Program()
    rng = random.Random(seed)
    atoms = sorted(alphabet)
    rules = []
    for _ in range(rng.randint(1, max_rules)):
        while True:
            head = rng.sample(atoms, min(len(atoms), rng.choice((0, 1, 1, 2))))
            body = rng.sample(atoms, min(len(atoms), rng.randint(0, max_body)))
            neg = [a for a in body if rng.random() < 0.5]
            pos = [a for a in body if a not in neg]
            if head or body:
                rules.append(Rule(head, pos, neg))
                break
    return Program(rules)


def tautology_twin(q: Program, atom: str) -> Program:
    """``q`` plus ``atom :- atom.``: strongly equivalent, syntactically different."""
    return q | {Rule([atom], [atom])}


@dataclass
class SweepFailure:
    seed: int
    strategy: str
    check: str
    detail: object = None


@dataclass
class SweepReport:
    pairs: int
    strategies: tuple[str, ...]
    checks: int = 0
    inconclusive: int = 0
    incomplete_enumerations: int = 0
    enumerations: int = 0
    uniformity_antecedents: int = 0
    failures: list[SweepFailure] = field(default_factory=list)
    reconstruction_failures: list[SweepFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.reconstruction_failures

    @property
    def inconclusive_rate(self) -> float:
        return self.inconclusive / self.checks if self.checks else 0.0

    def __str__(self) -> str:
        lines = [
            f"pairs: {self.pairs}  strategies: {', '.join(self.strategies)}",
            f"postulate checks: {self.checks}  failures: {len(self.failures)}  "
            f"inconclusive: {self.inconclusive} ({self.inconclusive_rate:.1%})",
            f"truncated enumerations: {self.incomplete_enumerations}/{self.enumerations}",
            f"uniformity antecedents exercised: {self.uniformity_antecedents}",
            f"reconstruction failures: {len(self.reconstruction_failures)}",
        ]
        for f in self.failures[:10] + self.reconstruction_failures[:10]:
            lines.append(f"  seed {f.seed} [{f.strategy}] {f.check}: {f.detail}")
        return "\n".join(lines)


def sweep_pairs(seeds: int, atoms: Sequence[str] = ("a", "b", "c"), max_rules: int = 4,
                max_body: int = 2) -> list[tuple[int, Program, Program, list[Program]]]:
    """Seeded ``(seed, P, Q, [R...])`` tuples; each ``R`` is a uniformity partner for ``Q``."""
    out = []
    for seed in range(seeds):
        p = random_program(3 * seed, atoms, max_rules, max_body)
        q = random_program(3 * seed + 1, atoms, max_rules, max_body)
        other = random_program(3 * seed + 2, atoms, max_rules, max_body)
        out.append((seed, p, q, [tautology_twin(q, sorted(atoms)[0]), other]))
    return out


def postulate_sweep(seeds: int = 200, atoms: Sequence[str] = ("a", "b", "c"),
                  max_rules: int = 4, max_body: int = 2,
                  strategies: Iterable[str] = tuple(s.value for s in SelectionStrategy),
                  universe: RuleUniverse | None = None, bound: int | None = 4,
                  search: str = "targeted") -> SweepReport:
    """Check every postulate and the gamma reconstruction over seeded pairs."""
    from .estimator import SLPRevision

    strategies = tuple(str(s) for s in strategies)
    if universe is None:
        universe = RuleUniverse.generate(atoms)
    report = SweepReport(seeds, strategies)
    pairs = sweep_pairs(seeds, atoms, max_rules, max_body)
    for seed, p, q, partners in pairs:
        for strategy in strategies:
            o = SLPRevision(strategy=strategy, universe=universe, max_edits=bound,
                            search=search)
            cands = o.candidate_set(p, q)
            report.enumerations += 1
            report.incomplete_enumerations += not cands.complete_within_bound
            base = check_postulates(o, p, q)
            verdicts = [v for k, v in base.verdicts.items() if k != "s*u"]
            for r in partners:
                u = check_uniformity(o, p, q, r)
                verdicts.append(u)
                if u.status == PASS and not u.vacuous:
                    report.uniformity_antecedents += 1
                    if reconstruct_gamma(o, p, q) != reconstruct_gamma(o, p, r):
                        report.reconstruction_failures.append(
                            SweepFailure(seed, strategy, "gamma-functionality", r))
            for v in verdicts:
                report.checks += 1
                if v.status == FAIL:
                    report.failures.append(SweepFailure(seed, strategy, v.postulate, v.witness))
                elif v.status == INCONCLUSIVE:
                    report.inconclusive += 1
            _check_reconstruction(o, seed, strategy, p, q, cands, report)
    return report


def _check_reconstruction(o, seed, strategy, p, q, cands, report):
    gamma = reconstruct_gamma(o, p, q)
    res = o(p, q)
    if gamma | q != res:
        report.reconstruction_failures.append(
            SweepFailure(seed, strategy, "gamma-union", gamma))
    if cands:
        if gamma not in cands.programs(p):
            report.reconstruction_failures.append(
                SweepFailure(seed, strategy, "gamma-membership", gamma))
    elif cands.complete_within_bound and gamma != p:
        report.reconstruction_failures.append(
            SweepFailure(seed, strategy, "gamma-empty", gamma))


def relevance_separations(pairs: Iterable[tuple[Program, Program]],
                          universe_of: Callable[[Program, Program], RuleUniverse] | None = None,
                          max_changes: int = 3, limit: int = 5) -> dict[str, list]:
    """Search edited revisions where s*rr and s*er disagree with s*mr.

    Every edit ``(D, E)`` of ``P`` with at most ``max_changes`` rules (additions
    drawn from ``universe_of(P, Q)``, facts by default) yields the candidate
    revision ``((P - D) | E) | Q``; the relevance checkers are run on it.
    Returns up to ``limit`` examples for each direction.
    """
    found = {"rr+er without mr": [], "mr without rr+er": []}
    for p, q in pairs:
        pool = (universe_of(p, q) if universe_of else
                RuleUniverse.facts(p.atoms | q.atoms)).bind(p, q).candidates
        items = [("D", r) for r in p] + [("E", r) for r in pool]
        for k in range(1, max_changes + 1):
            for combo in combinations(items, k):
                d = Program(r for t, r in combo if t == "D")
                e = Program(r for t, r in combo if t == "E")
                if not d or not e:
                    continue
                res = ((p - d) | e) | q

                def fixed(_p, _q, res=res):
                    return res

                rr = check_removal_relevance(fixed, p, q).passed
                er = check_expansion_relevance(fixed, p, q).passed
                mr = check_mixed_relevance(fixed, p, q).passed
                key = None
                if rr and er and not mr:
                    key = "rr+er without mr"
                elif mr and not (rr and er):
                    key = "mr without rr+er"
                if key and len(found[key]) < limit:
                    found[key].append((p, q, res))
            if all(len(v) >= limit for v in found.values()):
                return found
    return found
