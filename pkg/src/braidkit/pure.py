"""Pure braids, linking numbers and the abelianization of P_n.

An :class:`AbelianVector` holds the coefficients of the basis elements
A_ij (the classes of the squared band generators).  The zero-sum sublattice
is the image of J_n, the pure braids of exponent sum zero, when n >= 5;
for n = 3, 4 that identification fails and nothing here replaces it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .braid import BraidWord, delete_strands, exponent_sum, permutation_of


def _pairs(n: int):
    return list(combinations(range(1, n + 1), 2))


@dataclass(frozen=True)
class AbelianVector:
    n: int
    coords: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, n: int, coords: Mapping[tuple[int, int], int]) -> AbelianVector:
        for key in coords:
            if key not in set(_pairs(n)):
                raise ValueError(f"bad pair {key} for n={n}")
        return cls(n, tuple((p, int(coords.get(p, 0))) for p in _pairs(n)))

    @classmethod
    def zero(cls, n: int) -> AbelianVector:
        return cls.from_dict(n, {})

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> AbelianVector:
        return cls.from_dict(n, {(i, j): 1})

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coords)

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self.as_dict()[pair]

    def __add__(self, other: AbelianVector) -> AbelianVector:
        self._check(other)
        return AbelianVector(self.n, tuple((p, a + b) for (p, a), (_, b) in zip(self.coords, other.coords)))

    def __neg__(self) -> AbelianVector:
        return AbelianVector(self.n, tuple((p, -a) for p, a in self.coords))

    def __sub__(self, other: AbelianVector) -> AbelianVector:
        return self + (-other)

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("strand count mismatch")

    def total(self) -> int:
        return sum(a for _, a in self.coords)

    def __str__(self) -> str:
        sep = "," if self.n > 9 else ""
        parts = [f"A{i}{sep}{j}:{a}" for (i, j), a in self.coords if a]
        return " ".join(parts) if parts else "0"


def is_pure(a: BraidWord) -> bool:
    return permutation_of(a).is_identity()


def is_commutator(a: BraidWord) -> bool:
    # B_n^ab is Z via the exponent sum
    return exponent_sum(a) == 0


def is_in_Jn(a: BraidWord) -> bool:
    return is_pure(a) and is_commutator(a)


def linking(a: BraidWord, i: int, j: int) -> int:
    """Linking number of strands i and j of a pure braid."""
    if i == j:
        raise ValueError("need two distinct strands")
    e = exponent_sum(delete_strands(a, {i, j}))
    if e % 2:
        raise ValueError(f"odd crossing count between strands {i} and {j}: input is not pure")
    return e // 2


def abelianize_pure(a: BraidWord) -> AbelianVector:
    if not is_pure(a):
        raise ValueError("abelianize_pure needs a pure braid")
    return AbelianVector.from_dict(a.strands, {(i, j): linking(a, i, j) for i, j in _pairs(a.strands)})


def in_Jn_lattice(v: AbelianVector) -> bool:
    return v.total() == 0
