"""Input coercion shared by the estimator, the harness and the CLI."""
from __future__ import annotations

import os
from typing import Iterable

from .program import Program, Rule
from .revision import SEARCH_METHODS, RuleUniverse, SelectionStrategy
from .syntax import parse_program, read_program


def check_program(obj, *, name: str = "program") -> Program:
    """Coerce ``obj`` into a :class:`Program`.

    Accepts a ``Program``, program source text, a path to a ``.lp`` file, a
    single ``Rule`` or an iterable of rules.
    """
    if isinstance(obj, Program):
        return obj
    if isinstance(obj, Rule):
        return Program([obj])
    if isinstance(obj, os.PathLike):
        return read_program(obj)
    if isinstance(obj, str):
        return parse_program(obj)
    try:
        rules = list(obj)
    except TypeError:
        raise TypeError(f"{name}: cannot interpret {type(obj).__name__} as a program") from None
    if not all(isinstance(r, Rule) for r in rules):
        raise TypeError(f"{name}: expected an iterable of Rule objects")
    return Program(rules)


def check_programs(objs: Iterable, *, name: str = "programs") -> list[Program]:
    if isinstance(objs, (str, Program, Rule)):
        raise TypeError(f"{name}: expected a sequence of programs, got a single program")
    return [check_program(o, name=f"{name}[{i}]") for i, o in enumerate(objs)]


def check_strategy(strategy) -> SelectionStrategy:
    try:
        return SelectionStrategy(strategy)
    except ValueError:
        names = ", ".join(s.value for s in SelectionStrategy)
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {names}") from None


def check_bound(bound) -> int | None:
    if bound is None:
        return None
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
        raise ValueError(f"max_edits must be a non-negative int or None, got {bound!r}")
    return bound


def check_method(method: str) -> str:
    if method not in SEARCH_METHODS:
        raise ValueError(f"unknown search method {method!r}; expected one of {SEARCH_METHODS}")
    return method


def check_universe(universe) -> RuleUniverse | None:
    """``None`` (generate per revision), a ``RuleUniverse`` or program-like rules."""
    if universe is None or isinstance(universe, RuleUniverse):
        return universe
    return RuleUniverse(check_program(universe, name="universe"))
