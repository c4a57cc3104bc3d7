"""Command-line interface.

Exit codes: 0 success, 1 a boolean query answered "no" (inconsistent,
postulate failure), 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from string import ascii_lowercase

from . import semantics
from .estimator import SLPRevision
from .postulates import POSTULATES, check_postulates, postulate_sweep
from .program import Alphabet, AlphabetTooLarge, EditSet, Program
from .revision import DEFAULT_BOUND, DEFAULT_GEN_BODY, DEFAULT_GEN_HEAD, RuleUniverse
from .syntax import ParseError, program_to_json, read_program


def _fmt_interp(atoms) -> str:
    return "{" + ", ".join(sorted(atoms)) + "}"


def _sorted_interps(models) -> list[list[str]]:
    return sorted((sorted(m) for m in models), key=lambda m: (len(m), m))


def _sorted_se(models) -> list[list[list[str]]]:
    return sorted(([sorted(m.x), sorted(m.y)] for m in models),
                  key=lambda xy: (len(xy[1]), xy[1], len(xy[0]), xy[0]))


def _edit_json(e: EditSet | None):
    if e is None:
        return None
    return {"removals": program_to_json(e.removals), "additions": program_to_json(e.additions)}


def _witness_json(w):
    if w is None:
        return None
    if isinstance(w, Program):
        return program_to_json(w)
    if isinstance(w, EditSet):
        return _edit_json(w)
    if isinstance(w, tuple):
        return [_witness_json(x) for x in w]
    return str(w)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif text:
        print(text)


def _bound(value: str) -> int | None:
    if value.lower() in ("none", "inf", "unbounded"):
        return None
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative int or 'none', got {value!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("bound must be non-negative")
    return n


def _load(path: str) -> Program:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        p = read_program(path)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return p


def _cmd_models(args) -> int:
    p = _load(args.file)
    sigma = Alphabet.of(p, args.atoms)
    if args.command == "models":
        models = _sorted_interps(semantics.classical_models(p, sigma))
        key = "models"
    else:
        models = _sorted_interps(semantics.answer_sets(p, sigma))
        key = "answer_sets"
    text = "\n".join(_fmt_interp(m) for m in models) if models else "(none)"
    _emit(args, {key: models, "alphabet": list(sigma.atoms)}, text)
    return 0


def _cmd_se(args) -> int:
    p = _load(args.file)
    sigma = Alphabet.of(p, args.atoms)
    models = _sorted_se(semantics.se_models(p, sigma))
    text = "\n".join(f"({_fmt_interp(x)}, {_fmt_interp(y)})" for x, y in models) or "(none)"
    _emit(args, {"se_models": models, "alphabet": list(sigma.atoms)}, text)
    return 0


def _cmd_consistent(args) -> int:
    p = _load(args.file)
    if args.command == "consistent":
        ok, word = semantics.is_consistent(p), "consistent"
    else:
        ok, word = semantics.is_m_consistent(p), "m-consistent"
    _emit(args, {word.replace("-", "_"): ok}, word if ok else f"not {word}")
    return 0 if ok else 1


def _estimator(args) -> SLPRevision:
    universe = None
    if args.universe == "facts":
        universe = "facts"
    elif args.universe is not None:
        universe = RuleUniverse(_load(args.universe))
    return SLPRevision(strategy=getattr(args, "strategy", "min-card"), universe=universe,
                       gen_head=args.gen_head, gen_body=args.gen_body,
                       max_edits=args.max_edits, search=args.search)


def _cmd_compatible(args) -> int:
    p, q = _load(args.P), _load(args.Q)
    est = _estimator(args).fit(p)
    cands = est.compatible(q, mode=args.mode)
    members = list(cands)
    lines = [f"mode: {args.mode}",
             f"complete: {str(cands.complete_within_bound).lower()} "
             f"(bound {cands.bound_used if cands.bound_used is not None else 'none'})",
             f"candidates: {len(members)}"]
    for i, e in enumerate(members, 1):
        lines.append(f"[{i}] {e}")
    payload = {
        "mode": args.mode,
        "complete_within_bound": cands.complete_within_bound,
        "bound": cands.bound_used,
        "candidates": [dict(_edit_json(e), program=program_to_json((p - e.removals) | e.additions))
                       for e in members],
    }
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_revise(args) -> int:
    p, q = _load(args.P), _load(args.Q)
    res = _estimator(args).fit(p).revise(q)
    e = res.edit
    removed = " ".join(map(str, e.removals)) if e and e.removals else "-"
    added = " ".join(map(str, e.additions)) if e and e.additions else "-"
    text = (f"% strategy: {args.strategy}  status: {res.status}\n"
            f"% removed: {removed}\n% added: {added}\n{res.revised}").rstrip("\n")
    payload = {"strategy": args.strategy, "status": res.status, "complete": res.complete,
               "edit": _edit_json(e), "selected": program_to_json(res.selected),
               "revised": program_to_json(res.revised)}
    _emit(args, payload, text)
    return 0


def _cmd_check(args) -> int:
    p, q = _load(args.P), _load(args.Q)
    r = _load(args.R) if args.R else None
    est = _estimator(args)
    report = check_postulates(est, p, q, r)
    verdicts = [report.verdicts[k] for k in POSTULATES]
    lines = [str(v) for v in verdicts]
    lines.append("all postulates pass" if report.ok else
                 f"{len(report.failures)} postulate(s) fail")
    payload = {
        "ok": report.ok,
        "revised": program_to_json(report.revised),
        "postulates": {v.postulate: {"status": v.status, "vacuous": v.vacuous, "note": v.note,
                                     "witness": _witness_json(v.witness)} for v in verdicts},
    }
    _emit(args, payload, "\n".join(lines))
    return 0 if report.ok else 1


def _cmd_sweep(args) -> int:
    atoms = tuple(ascii_lowercase[:args.atoms])
    report = postulate_sweep(args.seeds, atoms, args.max_rules, strategies=args.strategies,
                           bound=args.max_edits, search=args.search)
    payload = {
        "ok": report.ok, "pairs": report.pairs, "checks": report.checks,
        "failures": [{"seed": f.seed, "strategy": f.strategy, "check": f.check}
                     for f in report.failures],
        "reconstruction_failures": [{"seed": f.seed, "strategy": f.strategy, "check": f.check}
                                    for f in report.reconstruction_failures],
        "inconclusive": report.inconclusive,
        "truncated_enumerations": report.incomplete_enumerations,
        "enumerations": report.enumerations,
        "uniformity_antecedents": report.uniformity_antecedents,
    }
    _emit(args, payload, str(report))
    return 0 if report.ok else 1


def _search_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--universe", metavar="FILE",
                    help="rules that may be added, or 'facts' for facts only "
                         "(default: generated over the atoms of P and Q)")
    sp.add_argument("--gen-head", type=int, default=DEFAULT_GEN_HEAD, metavar="N")
    sp.add_argument("--gen-body", type=int, default=DEFAULT_GEN_BODY, metavar="N")
    sp.add_argument("--max-edits", type=_bound, default=DEFAULT_BOUND, metavar="K",
                    help="bound on removed + added rules, or 'none' (default: %(default)s)")
    sp.add_argument("--search", choices=("targeted", "levelwise"), default="targeted")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    parser = argparse.ArgumentParser(prog="slprev", parents=[common],
                                     description="Revise ground logic programs under answer sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, helptext in (
            ("models", _cmd_models, "classical models"),
            ("answer-sets", _cmd_models, "answer sets"),
            ("se-models", _cmd_se, "SE models"),
            ("consistent", _cmd_consistent, "does the program have an answer set"),
            ("m-consistent", _cmd_consistent, "does the program have a classical model")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file")
        if name in ("models", "answer-sets", "se-models"):
            sp.add_argument("--atoms", type=lambda s: [a for a in s.split(",") if a],
                            default=[], help="extra atoms for the alphabet, comma separated")
        sp.set_defaults(func=func)

    sp = sub.add_parser("compatible", parents=[common], help="candidate edits of P for Q")
    sp.add_argument("--mode", choices=("removal", "expansion", "full"), default="full")
    sp.add_argument("P")
    sp.add_argument("Q")
    _search_flags(sp)
    sp.set_defaults(func=_cmd_compatible)

    strategies = ("min-card", "prefer-removal", "prefer-expansion")
    sp = sub.add_parser("revise", parents=[common], help="revise P by Q")
    sp.add_argument("P")
    sp.add_argument("Q")
    sp.add_argument("--strategy", choices=strategies, default="min-card")
    _search_flags(sp)
    sp.set_defaults(func=_cmd_revise)

    sp = sub.add_parser("check-postulates", parents=[common],
                        help="check the revision postulates on P, Q (and R for uniformity)")
    sp.add_argument("P")
    sp.add_argument("Q")
    sp.add_argument("R", nargs="?")
    sp.add_argument("--strategy", choices=strategies, default="min-card")
    _search_flags(sp)
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("sweep", parents=[common], help="randomised postulate sweep")
    sp.add_argument("--seeds", type=int, default=200)
    sp.add_argument("--atoms", type=int, default=3, metavar="K")
    sp.add_argument("--max-rules", type=int, default=4)
    sp.add_argument("--strategies", nargs="+", choices=strategies, default=list(strategies))
    sp.add_argument("--max-edits", type=_bound, default=DEFAULT_BOUND, metavar="K")
    sp.add_argument("--search", choices=("targeted", "levelwise"), default="targeted")
    sp.set_defaults(func=_cmd_sweep)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else 2
    args.json = getattr(args, "json", False)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, AlphabetTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
