"""Braid words in the Artin generators and the named elements built from them.

Letters are 1-based signed generator indices: ``2`` is sigma_2 and ``-2`` is
its inverse.  Words are never reduced here; equality of braids is decided by
:mod:`braidkit.garside`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _kernels
from .perm import Permutation


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(f"letter {x} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        """Whitespace separated signed integers, e.g. ``"1 -2 3"``."""
        try:
            letters = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError:
            raise ValueError(f"bad braid word: {text!r}") from None
        return cls(strands, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return invert(self) ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def embed(self, strands: int) -> BraidWord:
        """The same letters viewed on more strands (the standard inclusion)."""
        if strands < self.strands:
            raise ValueError("cannot embed into fewer strands")
        return BraidWord(strands, self.letters)

    def array(self) -> np.ndarray:
        return np.asarray(self.letters, dtype=np.int64)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")
    return BraidWord(a.strands, a.letters + b.letters)


def product(words: Iterable[BraidWord], strands: int) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strands != strands:
            raise ValueError(f"strand mismatch: {w.strands} vs {strands}")
        letters.extend(w.letters)
    return BraidWord(strands, tuple(letters))


def invert(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-x for x in reversed(a.letters)))


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


def permutation_of(a: BraidWord) -> Permutation:
    """The strand permutation: the strand starting at i ends at position ``p(i)``."""
    final = _kernels.strand_positions(a.array(), a.strands)
    return Permutation(tuple(int(x) + 1 for x in final))


def shift2(a: BraidWord, strands: int | None = None) -> BraidWord:
    """Move every crossing two strands to the right."""
    strands = a.strands + 2 if strands is None else strands
    return BraidWord(strands, tuple(x + 2 if x > 0 else x - 2 for x in a.letters))


def delete_strands(a: BraidWord, keep: Iterable[int]) -> BraidWord:
    """Forget every strand not in ``keep`` (1-based starting positions).

    Crossings between two kept strands survive, re-indexed among the kept
    strands currently present; crossings touching a deleted strand vanish.
    """
    keep = set(keep)
    if not keep or any(not 1 <= s <= a.strands for s in keep):
        raise ValueError(f"keep set {sorted(keep)} invalid for {a.strands} strands")
    at = list(range(1, a.strands + 1))  # at[pos] = strand occupying pos+1
    out = []
    for x in a.letters:
        g = abs(x)
        left, right = at[g - 1], at[g]
        if left in keep and right in keep:
            idx = sum(1 for s in at[:g] if s in keep)
            out.append(idx if x > 0 else -idx)
        at[g - 1], at[g] = right, left
    return BraidWord(len(keep), tuple(out))


# --- named elements ---------------------------------------------------------

def half_twist(n: int) -> BraidWord:
    return BraidWord(n, tuple(j for i in range(1, n) for j in range(1, n - i + 1)))


def cycle_delta(n: int) -> BraidWord:
    return BraidWord(n, tuple(range(n - 1, 0, -1)))


def cycle_gamma(n: int) -> BraidWord:
    return BraidWord(n, (1,) + cycle_delta(n).letters)


def band_generator(i: int, j: int, n: int) -> BraidWord:
    """The positive crossing of strands i < j passing in front of the strands between them."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}) with n={n}")
    conj = tuple(range(j - 1, i, -1))
    return BraidWord(n, conj + (i,) + tuple(-x for x in reversed(conj)))


def c_i(i: int, n: int) -> BraidWord:
    if not 3 <= i <= n - 1:
        raise ValueError(f"c_i needs 3 <= i <= n-1, got i={i}, n={n}")
    return BraidWord(n, (-1, i))


def tau_element(n: int) -> BraidWord:
    """sigma_1^((n-2)(n-3)) times the shifted inverse full twist on the last n-2 strands."""
    if n < 3:
        raise ValueError("tau needs n >= 3")
    head = BraidWord(n, (1,) * ((n - 2) * (n - 3)))
    return head * shift2(half_twist(n - 2) ** -2, n)


def _require(name: str, n: int, lo: int, hi: int | None = None):
    if n < lo or (hi is not None and n > hi):
        rng = f"n={lo}" if hi == lo else f"n>={lo}"
        raise ValueError(f"constant {name!r} needs {rng}, got n={n}")


def make_constant(name: str, n: int) -> BraidWord:
    """Look up a named element.

    Names: ``Delta delta gamma c w u t d g h tau``, and the parametrised
    ``sigma_ij:i,j`` and ``c_i:i``.
    """
    base, _, arg = name.partition(":")
    if base == "Delta":
        _require(name, n, 1)
        return half_twist(n)
    if base == "delta":
        _require(name, n, 1)
        return cycle_delta(n)
    if base == "gamma":
        _require(name, n, 2)
        return cycle_gamma(n)
    if base == "sigma_ij":
        try:
            i, j = (int(x) for x in arg.split(","))
        except ValueError:
            raise ValueError(f"expected sigma_ij:i,j, got {name!r}") from None
        return band_generator(i, j, n)
    if base == "c_i":
        try:
            i = int(arg)
        except ValueError:
            raise ValueError(f"expected c_i:i, got {name!r}") from None
        return c_i(i, n)
    if base == "c":
        _require(name, n, 4)
        return BraidWord(n, (3, -1))
    if base == "w":
        _require(name, n, 4)
        return BraidWord(n, (2, 3, -1, -2))
    if base == "u":
        _require(name, n, 3)
        return BraidWord(n, (2, -1))
    if base == "t":
        _require(name, n, 3)
        return BraidWord(n, (-1, 2))
    if base == "d":
        _require(name, n, 4, 4)
        return half_twist(4) * BraidWord(4, (-1, -1, -1, -3, -3, -3))
    if base == "g":
        _require(name, n, 3)
        return half_twist(3).embed(n) ** 2 * BraidWord(n, (-1,) * 6)
    if base == "h":
        _require(name, n, 4)
        return half_twist(3).embed(n) ** -2 * BraidWord(n, (3, 2, 1, 1, 2, 3))
    if base == "tau":
        return tau_element(n)
    raise ValueError(f"unknown constant {name!r}")


CONSTANT_NAMES = ("Delta", "delta", "gamma", "sigma_ij:i,j", "c", "w", "u", "t", "d", "g", "h", "tau", "c_i:i")


def sigma(i: int, n: int) -> BraidWord:
    return BraidWord(n, (i,))
