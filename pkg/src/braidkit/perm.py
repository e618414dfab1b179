"""Permutations of {1..n}, subgroup closure and the exceptional automorphism of S_6.

Products are read left to right: ``p * q`` applies ``p`` first, then ``q``,
so ``(p * q)(i) == q(p(i))``.  With this convention the permutation of a
braid word is the product of the transpositions of its letters in reading
order.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n} stored in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Parse cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` or ``"id"`` is the identity."""
        text = text.strip()
        if text in ("", "id", "()"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = [
            [int(x) for x in re.split(r"[\s,]+", body.strip())]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n or x in seen:
                    raise ValueError(f"bad cycle notation for degree {n}: {text!r}")
                seen.add(x)
        return cls.from_cycles(n, cycles)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def conjugate(self, by: Permutation) -> Permutation:
        """Relabel by ``by``: the result maps ``by(i)`` to ``by(self(i))``."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def fixed_points(self) -> set[int]:
        return {i for i, x in enumerate(self.images, start=1) if x == i}

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r}, n={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


def invert(p: Permutation) -> Permutation:
    return p.inverse()


def conjugate(p: Permutation, by: Permutation) -> Permutation:
    return p.conjugate(by)


def closure(gens: Iterable[Permutation], degree: int | None = None) -> frozenset[Permutation]:
    """The subgroup generated by ``gens`` as an explicit set of elements."""
    gens = list(gens)
    if not gens:
        if degree is None:
            raise ValueError("degree required for an empty generating set")
        return frozenset({Permutation.identity(degree)})
    n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise ValueError("degree mismatch")
    ident = Permutation.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def common_fixed_points(perms: Iterable[Permutation]) -> set[int]:
    perms = list(perms)
    if not perms:
        raise ValueError("empty set")
    pts = perms[0].fixed_points()
    for p in perms[1:]:
        pts &= p.fixed_points()
    return pts


S6_GENERATORS = (
    Permutation.from_cycles(6, [(1, 2)]),
    Permutation.from_cycles(6, [(1, 2, 3, 4, 5, 6)]),
)
NU_GENERATOR_IMAGES = (
    Permutation.from_cycles(6, [(1, 2), (3, 4), (5, 6)]),
    Permutation.from_cycles(6, [(1, 2, 3), (4, 5)]),
)


@lru_cache(maxsize=1)
def _nu_table() -> dict[Permutation, Permutation]:
    # BFS in a fixed generator order, so the table is reproducible.
    ident = Permutation.identity(6)
    table = {ident: ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g, img in zip(S6_GENERATORS, NU_GENERATOR_IMAGES):
            y = x * g
            if y not in table:
                table[y] = table[x] * img
                queue.append(y)
    if len(table) != 720:
        raise RuntimeError("generators do not span S6")
    return table


def nu(p: Permutation) -> Permutation:
    """Outer automorphism of S_6 fixed by (1 2) -> (1 2)(3 4)(5 6), (1 2 3 4 5 6) -> (1 2 3)(4 5)."""
    if p.degree != 6:
        raise ValueError("nu is defined on S6 only")
    return _nu_table()[p]
