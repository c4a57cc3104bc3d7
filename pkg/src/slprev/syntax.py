"""Plain-text and JSON formats for ground programs.

Grammar (``%`` starts a comment that runs to the end of the line)::

    rule := head? (":-" body)? "."
    head := atom (";" atom)*
    body := lit ("," lit)*
    lit  := atom | "not" atom
    atom := lowercase identifier, optionally followed by "(c1, ..., ck)"

At least one of head and body must be present. Atoms such as ``prof(john)``
are opaque names; ``not`` is reserved.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from typing import Iterable

from .program import Program, Rule

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<if>:-)
  | (?P<dot>\.)
  | (?P<comma>,)
  | (?P<semi>;)
  | (?P<atom>[a-z][A-Za-z0-9_]*
        (?:\(\s*[A-Za-z0-9_]+(?:\s*,\s*[A-Za-z0-9_]+)*\s*\))?)
""", re.VERBOSE)


class DuplicateRuleWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Span:
    line: int
    col: int
    end_line: int
    end_col: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


class ParseError(ValueError):
    def __init__(self, message: str, span: Span, source: str = "<string>"):
        super().__init__(f"{source}:{span}: {message}")
        self.message = message
        self.span = span
        self.source = source


@dataclass(frozen=True)
class SourceText:
    text: str
    name: str = "<string>"

    @classmethod
    def from_file(cls, path) -> SourceText:
        with open(path, encoding="utf-8") as fh:
            return cls(fh.read(), str(path))


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    span: Span


def _tokenize(src: SourceText) -> list[_Tok]:
    text = src.text
    toks, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             Span(line, col, line, col + 1), src.name)
        raw = m.group()
        newlines = raw.count("\n")
        end_line = line + newlines
        end_col = len(raw) - raw.rfind("\n") if newlines else col + len(raw)
        kind = m.lastgroup
        if kind == "atom" and raw == "not":
            kind = "not"
        elif kind == "atom" and raw.startswith("not("):
            raise ParseError("'not' is reserved and cannot name a predicate",
                             Span(line, col, end_line, end_col), src.name)
        if kind not in ("ws", "comment"):
            lexeme = re.sub(r"\s+", "", raw) if kind == "atom" else raw
            toks.append(_Tok(kind, lexeme, Span(line, col, end_line, end_col)))
        if newlines:
            line, line_start = end_line, pos + raw.rfind("\n") + 1
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, src: SourceText):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    def error(self, message: str, tok: _Tok | None = None):
        if tok is None:
            tok = self.toks[self.i] if self.i < len(self.toks) else self._eof()
        raise ParseError(message, tok.span, self.src.name)

    def _eof(self) -> _Tok:
        lines = self.src.text.split("\n")
        span = Span(len(lines), len(lines[-1]) + 1, len(lines), len(lines[-1]) + 1)
        return _Tok("eof", "", span)

    def peek(self) -> str:
        return self.toks[self.i].kind if self.i < len(self.toks) else "eof"

    def take(self, kind: str) -> _Tok:
        if self.peek() != kind:
            found = self.peek()
            self.error(f"expected {kind}, found {found if found != 'eof' else 'end of input'}")
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def atom(self) -> str:
        if self.peek() == "not":
            self.error("'not' is reserved and cannot be used as an atom")
        return self.take("atom").text

    def rule(self) -> tuple[Rule, Span]:
        start = self.toks[self.i].span
        head, pos, neg = [], [], []
        if self.peek() in ("atom", "not"):
            head.append(self.atom())
            while self.peek() == "semi":
                self.take("semi")
                head.append(self.atom())
        if self.peek() == "if":
            self.take("if")
            while True:
                if self.peek() == "not":
                    self.take("not")
                    neg.append(self.atom())
                elif self.peek() == "atom":
                    pos.append(self.atom())
                else:
                    self.error("expected a body literal")
                if self.peek() != "comma":
                    break
                self.take("comma")
        end = self.take("dot").span
        span = Span(start.line, start.col, end.end_line, end.end_col)
        if not (head or pos or neg):
            raise ParseError("empty rule: a rule needs a head or a body", span, self.src.name)
        return Rule(head, pos, neg), span

    def program(self) -> list[tuple[Rule, Span]]:
        out = []
        while self.peek() != "eof":
            out.append(self.rule())
        return out


def parse_rules(text: str | SourceText) -> list[tuple[Rule, Span]]:
    """Parse rules in source order, each paired with its source span."""
    src = text if isinstance(text, SourceText) else SourceText(text)
    return _Parser(src).program()


def parse_program(text: str | SourceText) -> Program:
    src = text if isinstance(text, SourceText) else SourceText(text)
    seen: dict[Rule, Span] = {}
    for rule, span in parse_rules(src):
        if rule in seen:
            warnings.warn(f"{src.name}:{span}: duplicate rule '{rule}' "
                          f"(first at {seen[rule]}) ignored", DuplicateRuleWarning,
                          stacklevel=2)
            continue
        seen[rule] = span
    return Program(seen)


def parse_rule(text: str) -> Rule:
    rules = parse_rules(text)
    if len(rules) != 1:
        raise ValueError(f"expected exactly one rule, got {len(rules)}")
    return rules[0][0]


def read_program(path) -> Program:
    return parse_program(SourceText.from_file(path))


def serialize_program(p: Iterable[Rule]) -> str:
    """One rule per line in canonical order; parses back to an equal program."""
    return str(Program(p))


def rule_to_json(r: Rule) -> dict:
    return {"head": sorted(r.head), "pos_body": sorted(r.pos_body),
            "neg_body": sorted(r.neg_body)}


def program_to_json(p: Iterable[Rule]) -> list[dict]:
    return [rule_to_json(r) for r in Program(p)]


def program_from_json(data: Iterable[dict]) -> Program:
    return Program(Rule(d.get("head", ()), d.get("pos_body", ()), d.get("neg_body", ()))
                   for d in data)
