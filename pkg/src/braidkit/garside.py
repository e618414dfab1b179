"""Left normal form Delta^p A_1 ... A_k and the word problem in B_n."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .braid import BraidWord, half_twist
from .perm import Permutation


@dataclass(frozen=True)
class GarsideNormalForm:
    strands: int
    infimum: int
    factors: tuple[Permutation, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_delta_power(self) -> bool:
        return not self.factors

    def to_word(self) -> BraidWord:
        """A braid word for this element: Delta^p followed by each factor's positive word."""
        n = self.strands
        letters = list((half_twist(n) ** self.infimum).letters)
        for f in self.factors:
            letters.extend(simple_word(f))
        return BraidWord(n, tuple(letters))

    def __str__(self) -> str:
        parts = [f"D^{self.infimum}"]
        parts += [" ".join(map(str, f.images)) for f in self.factors]
        return " | ".join(parts)


def simple_word(p: Permutation) -> list[int]:
    """Positive word of a permutation braid: bubble-sort the end positions."""
    cur = list(p.images)
    letters = []
    # cur[j] is the final position of the strand now at position j+1
    changed = True
    while changed:
        changed = False
        for j in range(len(cur) - 1):
            if cur[j] > cur[j + 1]:
                cur[j], cur[j + 1] = cur[j + 1], cur[j]
                letters.append(j + 1)
                changed = True
    return letters


def normal_form(a: BraidWord) -> GarsideNormalForm:
    inf, arr = _kernels.left_normal_form(a.array(), a.strands)
    factors = tuple(Permutation(tuple(int(x) + 1 for x in row)) for row in arr)
    return GarsideNormalForm(a.strands, int(inf), factors)


def _nf_key(a: BraidWord) -> tuple[int, bytes]:
    inf, arr = _kernels.left_normal_form(a.array(), a.strands)
    return int(inf), np.ascontiguousarray(arr).tobytes()


def equal(a: BraidWord, b: BraidWord) -> bool:
    if a.strands != b.strands:
        raise ValueError(f"strand mismatch: {a.strands} vs {b.strands}")
    return _nf_key(a) == _nf_key(b)


def is_trivial(a: BraidWord) -> bool:
    inf, arr = _kernels.left_normal_form(a.array(), a.strands)
    return inf == 0 and arr.shape[0] == 0


def commute(a: BraidWord, b: BraidWord) -> bool:
    return equal(a * b, b * a)


def is_central(a: BraidWord) -> bool:
    n = a.strands
    return all(commute(a, BraidWord(n, (i,))) for i in range(1, n))


def is_left_weighted(a: Permutation, b: Permutation) -> bool:
    """Every generator starting ``b`` already ends ``a``."""
    n = a.degree
    ainv = a.inverse()
    for i in range(1, n):
        starts_b = b(i) > b(i + 1)
        ends_a = ainv(i) > ainv(i + 1)
        if starts_b and not ends_a:
            return False
    return True
