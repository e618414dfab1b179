"""Freely reduced words over a small named alphabet, stored as syllables."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .braid import BraidWord

_SYLLABLE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


def _reduce(alphabet, syllables: Iterable[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[list] = []
    for sym, exp in syllables:
        if sym not in alphabet:
            raise ValueError(f"symbol {sym!r} not in alphabet {alphabet}")
        if exp == 0:
            continue
        if stack and stack[-1][0] == sym:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([sym, exp])
    return tuple((s, e) for s, e in stack)


@dataclass(frozen=True)
class FreeWord:
    alphabet: tuple[str, ...]
    syllables: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "syllables", _reduce(self.alphabet, self.syllables))

    @classmethod
    def parse(cls, text: str, alphabet: Iterable[str]) -> FreeWord:
        """``"c w^-1 c^2"``; an omitted exponent means 1, ``"1"`` or ``""`` is the identity."""
        alphabet = tuple(alphabet)
        syl = []
        for tok in text.split():
            if tok == "1":
                continue
            m = _SYLLABLE.match(tok)
            if not m or m.group(1) not in alphabet:
                raise ValueError(f"bad syllable {tok!r} for alphabet {alphabet}")
            syl.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        return cls(alphabet, tuple(syl))

    @classmethod
    def gen(cls, alphabet: Iterable[str], sym: str, exp: int = 1) -> FreeWord:
        return cls(tuple(alphabet), ((sym, exp),))

    def identity(self) -> FreeWord:
        return FreeWord(self.alphabet)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def letters(self) -> list[tuple[str, int]]:
        """One entry per letter, each with exponent +1 or -1."""
        return [(s, 1 if e > 0 else -1) for s, e in self.syllables for _ in range(abs(e))]

    def __mul__(self, other: FreeWord) -> FreeWord:
        return reduce_concat(self, other)

    def inverse(self) -> FreeWord:
        return FreeWord(self.alphabet, tuple((s, -e) for s, e in reversed(self.syllables)))

    def __invert__(self) -> FreeWord:
        return self.inverse()

    def __pow__(self, k: int) -> FreeWord:
        base = self if k >= 0 else self.inverse()
        out = self.identity()
        for _ in range(abs(k)):
            out = out * base
        return out

    def exponent(self, sym: str) -> int:
        return sum(e for s, e in self.syllables if s == sym)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self.syllables)


def reduce_concat(a: FreeWord, b: FreeWord) -> FreeWord:
    if a.alphabet != b.alphabet:
        raise ValueError(f"alphabet mismatch: {a.alphabet} vs {b.alphabet}")
    return FreeWord(a.alphabet, a.syllables + b.syllables)


def commutator(a: FreeWord, b: FreeWord) -> FreeWord:
    return a * b * a.inverse() * b.inverse()


def map_word(a: FreeWord, images: Mapping[str, FreeWord], alphabet: Iterable[str] | None = None) -> FreeWord:
    """Apply the free-group homomorphism given by symbol images."""
    if alphabet is None:
        alphabet = next(iter(images.values())).alphabet
    out: list[tuple[str, int]] = []
    inv_cache: dict[str, FreeWord] = {}
    for sym, e in a.syllables:
        try:
            img = images[sym]
        except KeyError:
            raise ValueError(f"no image for symbol {sym!r}") from None
        if e < 0:
            img = inv_cache.setdefault(sym, img.inverse())
        out.extend(img.syllables * abs(e))
    return FreeWord(tuple(alphabet), tuple(out))


def substitute(a: FreeWord, images: Mapping[str, BraidWord], strands: int | None = None) -> BraidWord:
    """Replace each symbol by its braid image."""
    missing = [s for s in a.alphabet if s not in images]
    if missing:
        raise ValueError(f"missing braid image for {missing}")
    ns = {w.strands for w in images.values()}
    if len(ns) != 1:
        raise ValueError("braid images must share one strand count")
    n = ns.pop() if strands is None else strands
    letters: list[int] = []
    for sym, e in a.syllables:
        img = images[sym].letters
        if e < 0:
            img = tuple(-x for x in reversed(img))
        letters.extend(img * abs(e))
    return BraidWord(n, tuple(letters))


def abelianize2(a: FreeWord) -> tuple[int, int]:
    if len(a.alphabet) != 2:
        raise ValueError("abelianize2 needs a two-letter alphabet")
    x, y = a.alphabet
    return a.exponent(x), a.exponent(y)


def reduced_words(alphabet: tuple[str, ...], max_syllables: int, max_exp: int):
    """Every reduced word with at most ``max_syllables`` syllables and exponents in [-max_exp, max_exp]."""
    exps = [e for e in range(-max_exp, max_exp + 1) if e != 0]

    def extend(prefix, last):
        yield FreeWord(alphabet, tuple(prefix))
        if len(prefix) == max_syllables:
            return
        for sym in alphabet:
            if sym == last:
                continue
            for e in exps:
                prefix.append((sym, e))
                yield from extend(prefix, sym)
                prefix.pop()

    yield from extend([], None)
