"""SE model sets packed into Python ints.

Interpretations over an ``n``-atom alphabet are ``n``-bit ints. The SE
interpretation ``(x, y)`` lives at bit ``y * 2**n + x``, so the block of
``x`` values paired with a fixed ``y`` is a contiguous ``2**n``-bit slice.
SE models of a union are the intersection of SE models, so a program's
mask is the AND of its rules' masks.
"""
from __future__ import annotations

from typing import Iterable

from .program import Alphabet, AlphabetTooLarge, Rule

ENGINE_MAX_ATOMS = 10


class SEMasks:
    def __init__(self, alphabet: Alphabet):
        n = len(alphabet)
        if n > ENGINE_MAX_ATOMS:
            raise AlphabetTooLarge(
                f"revision search handles at most {ENGINE_MAX_ATOMS} atoms, got {n}")
        self.alphabet = alphabet
        self.n = n
        self.width = 1 << n
        self._bit = {a: 1 << i for i, a in enumerate(alphabet.atoms)}
        w = self.width
        self.below = [self._subset_mask(v) for v in range(w)]
        self.above = [self._superset_mask(v) for v in range(w)]
        self.full_block = (1 << w) - 1
        self.top = sum(self.below[y] << (y * w) for y in range(w))
        self.diag = sum(1 << (y * w + y) for y in range(w))
        self._rules: dict[Rule, int] = {}
        self._consistent: dict[int, bool] = {}

    def _subset_mask(self, v: int) -> int:
        m, x = 0, v
        while True:
            m |= 1 << x
            if x == 0:
                return m
            x = (x - 1) & v

    def _superset_mask(self, v: int) -> int:
        return sum(1 << x for x in range(self.width) if x & v == v)

    def encode(self, atoms: Iterable[str]) -> int:
        return sum(self._bit[a] for a in atoms)

    def decode(self, v: int) -> frozenset[str]:
        return frozenset(a for a, b in self._bit.items() if v & b)

    def rule(self, r: Rule) -> int:
        m = self._rules.get(r)
        if m is None:
            m = self._rules[r] = self._rule_mask(r)
        return m

    def _rule_mask(self, r: Rule) -> int:
        h, bp, bn = self.encode(r.head), self.encode(r.pos_body), self.encode(r.neg_body)
        w = self.width
        m = 0
        for y in range(w):
            if (bp & y) == bp and not (bn & y) and not (h & y):
                continue  # y violates r, no (x, y) survives
            if bn & y:
                block = self.below[y]
            else:
                block = self.below[y] & ~(self.below[y & ~h] & self.above[bp])
            m |= block << (y * w)
        return m

    def program(self, rules: Iterable[Rule]) -> int:
        m = self.top
        for r in rules:
            m &= self.rule(r)
        return m

    def block(self, m: int, y: int) -> int:
        return (m >> (y * self.width)) & self.full_block

    def totals(self, m: int) -> list[int]:
        """Interpretations ``y`` with ``(y, y)`` in the mask (classical models)."""
        w = self.width
        d = m & self.diag
        out = []
        while d:
            low = d & -d
            out.append((low.bit_length() - 1) // w)
            d ^= low
        return out

    def answer_sets(self, m: int) -> list[int]:
        return [y for y in self.totals(m) if self.block(m, y) == 1 << y]

    def consistent(self, m: int) -> bool:
        c = self._consistent.get(m)
        if c is None:
            c = self._consistent[m] = any(
                self.block(m, y) == 1 << y for y in self.totals(m))
        return c

    def pairs(self, m: int) -> set[tuple[frozenset[str], frozenset[str]]]:
        out = set()
        for y in range(self.width):
            b = self.block(m, y)
            for x in range(self.width):
                if b >> x & 1:
                    out.add((self.decode(x), self.decode(y)))
        return out
