"""Exact rational linear algebra on Sym^2 V for the symmetric group action.

V has basis e_1..e_n; Sym^2 V has the monomial basis e_i e_j, i <= j.  The
zero-sum part W of span{e_i e_j : i < j} splits as W2 + W3, the submodules
generated by (e1 - e2)(e3 + ... + en) and (e1 - e2)(e3 - e4).  An
A_n-equivariant endomorphism of W is a*id on W2 plus b*id on W3, and fixing
e1 e2 - e3 e4 forces a = b = 1.

Everything is computed over Q with :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .perm import Permutation


def monomials(n: int) -> list[tuple[int, int]]:
    return list(combinations_with_replacement(range(1, n + 1), 2))


@dataclass(frozen=True)
class SymSquareVector:
    n: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(x) for x in self.coords)
        if len(coords) != self.n * (self.n + 1) // 2:
            raise ValueError("wrong number of coordinates")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, n: int) -> SymSquareVector:
        return cls(n, (0,) * (n * (n + 1) // 2))

    @classmethod
    def from_dict(cls, n: int, terms: dict[tuple[int, int], object]) -> SymSquareVector:
        index = {m: k for k, m in enumerate(monomials(n))}
        coords = [Fraction(0)] * len(index)
        for (i, j), x in terms.items():
            coords[index[(min(i, j), max(i, j))]] += Fraction(x)
        return cls(n, tuple(coords))

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return {m: x for m, x in zip(monomials(self.n), self.coords) if x}

    def __add__(self, o: SymSquareVector) -> SymSquareVector:
        return SymSquareVector(self.n, tuple(a + b for a, b in zip(self.coords, o.coords)))

    def __sub__(self, o: SymSquareVector) -> SymSquareVector:
        return SymSquareVector(self.n, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __neg__(self) -> SymSquareVector:
        return SymSquareVector(self.n, tuple(-a for a in self.coords))

    def __rmul__(self, s) -> SymSquareVector:
        s = Fraction(s)
        return SymSquareVector(self.n, tuple(s * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def in_W(self) -> bool:
        """Supported on i < j with coordinate sum zero."""
        d = self.as_dict()
        return all(i < j for i, j in d) and sum(d.values()) == 0

    def __str__(self) -> str:
        d = self.as_dict()
        if not d:
            return "0"
        return " + ".join(f"{x}*e{i}e{j}" for (i, j), x in d.items()).replace("+ -", "- ")


def linear_form(n: int, coeffs: dict[int, object]) -> list[Fraction]:
    """A vector of V: ``{1: 1, 2: -1}`` is e1 - e2."""
    out = [Fraction(0)] * n
    for i, x in coeffs.items():
        out[i - 1] += Fraction(x)
    return out


def sym_product(x: Sequence, y: Sequence) -> SymSquareVector:
    """The product of two vectors of V inside Sym^2 V."""
    n = len(x)
    terms: dict[tuple[int, int], Fraction] = {}
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                key = (min(i, j) + 1, max(i, j) + 1)
                terms[key] = terms.get(key, Fraction(0)) + Fraction(x[i]) * Fraction(y[j])
    return SymSquareVector.from_dict(n, terms)


def act_sym2(p: Permutation, v: SymSquareVector) -> SymSquareVector:
    """e_i e_j -> e_p(i) e_p(j), extended linearly."""
    if p.degree != v.n:
        raise ValueError("degree mismatch")
    return SymSquareVector.from_dict(v.n, {(p(i), p(j)): x for (i, j), x in v.as_dict().items()})


# --- exact linear algebra ---------------------------------------------------

class Echelon:
    """Incrementally built row echelon form over Q with sparse rows.

    With ``reduced=True`` the rows are kept in reduced form, so the
    coordinates of a vector in the span are its entries at the pivots.
    """

    def __init__(self, reduced: bool = False):
        self.reduced = reduced
        self.rows: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def residual(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        row = {c: Fraction(x) for c, x in row.items() if x}
        if self.reduced:
            for p in [c for c in row if c in self.rows]:
                coef = row.get(p)
                if coef:
                    self._axpy(row, -coef, self.rows[p])
            return row
        while row:
            lead = min(row)
            if lead not in self.rows:
                break
            self._axpy(row, -row[lead], self.rows[lead])
        return row

    @staticmethod
    def _axpy(row, s, other):
        for c, x in other.items():
            v = row.get(c, 0) + s * x
            if v:
                row[c] = v
            else:
                row.pop(c, None)

    def add(self, row: dict[int, Fraction]) -> bool:
        r = self.residual(row)
        if not r:
            return False
        lead = min(r)
        inv = 1 / r[lead]
        r = {c: x * inv for c, x in r.items()}
        if self.reduced:
            for other in self.rows.values():
                coef = other.get(lead)
                if coef:
                    self._axpy(other, -coef, r)
        self.rows[lead] = r
        return True

    def coordinates(self, row: dict[int, Fraction]) -> dict[int, Fraction] | None:
        """Coefficients on the basis rows (keyed by pivot), or None outside the span."""
        if not self.reduced:
            raise ValueError("coordinates need a reduced echelon form")
        if self.residual(row):
            return None
        return {p: Fraction(row.get(p, 0)) for p in self.rows}


@dataclass(frozen=True)
class RatMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> RatMatrix:
        return cls(tuple(tuple(Fraction(x) for x in r) for r in rows))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __matmul__(self, o: RatMatrix) -> RatMatrix:
        cols = list(zip(*o.rows))
        return RatMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))

    def __sub__(self, o: RatMatrix) -> RatMatrix:
        return RatMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, o.rows)))

    def rank(self) -> int:
        ech = Echelon()
        for r in self.rows:
            ech.add(dict(enumerate(r)))
        return ech.rank

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...] | None:
        """The unique solution of M x = rhs, or None if there is none or it is not unique."""
        m, k = self.shape
        ech = Echelon(reduced=True)
        for r, b in zip(self.rows, rhs):
            row = dict(enumerate(r))
            row[k] = Fraction(b)
            ech.add(row)
        if k in ech.rows or ech.rank != k:
            return None
        return tuple(ech.rows[i].get(k, Fraction(0)) for i in range(k))


# --- modules ----------------------------------------------------------------

def _sparse(v: SymSquareVector) -> dict[int, Fraction]:
    return {i: x for i, x in enumerate(v.coords) if x}


def _dense(n: int, row: dict[int, Fraction]) -> SymSquareVector:
    coords = [Fraction(0)] * (n * (n + 1) // 2)
    for i, x in row.items():
        coords[i] = x
    return SymSquareVector(n, tuple(coords))


def span_basis(vectors: Iterable[SymSquareVector], n: int) -> list[SymSquareVector]:
    """Reduced echelon basis of the span."""
    ech = Echelon(reduced=True)
    for v in vectors:
        ech.add(_sparse(v))
    return [_dense(n, ech.rows[p]) for p in sorted(ech.rows)]


def submodule(gen: SymSquareVector, group_gens: Sequence[Permutation]) -> list[SymSquareVector]:
    """Basis of the smallest subspace containing ``gen`` and stable under ``group_gens``."""
    n = gen.n
    ech = Echelon(reduced=True)
    queue = [gen]
    while queue:
        v = queue.pop()
        if ech.add(_sparse(v)):
            queue.extend(act_sym2(g, v) for g in group_gens)
    return [_dense(n, ech.rows[p]) for p in sorted(ech.rows)]


def action_matrices(basis: Sequence[SymSquareVector], group_gens: Sequence[Permutation]) -> list[RatMatrix]:
    """Matrices (columns = images of basis vectors) of each generator on the span of ``basis``."""
    if not basis:
        return [RatMatrix(()) for _ in group_gens]
    n = basis[0].n
    ech = Echelon(reduced=True)
    for v in basis:
        if not ech.add(_sparse(v)):
            raise ValueError("basis vectors are linearly dependent")
    pivots = sorted(ech.rows)
    # coordinates w.r.t. the echelon rows, then change back to ``basis``
    to_ech = [[ech.coordinates(_sparse(v))[p] for p in pivots] for v in basis]
    B = RatMatrix.from_rows(to_ech)  # row i: basis_i in echelon coordinates
    Binv = _inverse(B)
    mats = []
    for g in group_gens:
        cols = []
        for v in basis:
            coords = ech.coordinates(_sparse(act_sym2(g, v)))
            if coords is None:
                raise ValueError(f"span is not invariant under {g}")
            cols.append([coords[p] for p in pivots])
        # image_i = sum_p cols[i][p] * ech_p = sum_j (cols @ Binv)[i][j] * basis_j
        img = RatMatrix.from_rows(cols) @ Binv
        mats.append(RatMatrix(tuple(zip(*img.rows))))
    return mats


def _inverse(M: RatMatrix) -> RatMatrix:
    k = M.shape[0]
    ech = Echelon(reduced=True)
    for i, r in enumerate(M.rows):
        row = {j: x for j, x in enumerate(r) if x}
        row[k + i] = Fraction(1)
        ech.add(row)
    if any(p not in ech.rows for p in range(k)):
        raise ValueError("singular matrix")
    return RatMatrix(tuple(tuple(ech.rows[p].get(k + j, Fraction(0)) for j in range(k)) for p in range(k)))


def commutant_dimension(module_basis: Sequence[SymSquareVector], group_gens: Sequence[Permutation]) -> int:
    """Dimension of the space of linear maps of the module commuting with every generator."""
    k = len(module_basis)
    if k == 0:
        return 0
    mats = action_matrices(module_basis, group_gens)
    ech = Echelon()
    for M in mats:
        R = M.rows
        cols = [[R[t][s] for t in range(k)] for s in range(k)]
        for r in range(k):
            for s in range(k):
                # (X M - M X)[r, s] with X[r, t] as unknown r*k + t
                eq: dict[int, Fraction] = {}
                for t, x in enumerate(cols[s]):
                    if x:
                        eq[r * k + t] = eq.get(r * k + t, 0) + x
                for t, x in enumerate(R[r]):
                    if x:
                        eq[t * k + s] = eq.get(t * k + s, 0) - x
                ech.add(eq)
    return k * k - ech.rank


# --- the specific modules ---------------------------------------------------

def sn_generators(n: int) -> list[Permutation]:
    return [Permutation.from_cycles(n, [(1, 2)]), Permutation.from_cycles(n, [tuple(range(1, n + 1))])]


def an_generators(n: int) -> list[Permutation]:
    """The 3-cycles (1 2 k), k = 3..n."""
    return [Permutation.from_cycles(n, [(1, 2, k)]) for k in range(3, n + 1)]


def e(n: int, i: int) -> list[Fraction]:
    return linear_form(n, {i: 1})


def w2_generator(n: int) -> SymSquareVector:
    return sym_product(linear_form(n, {1: 1, 2: -1}), linear_form(n, {i: 1 for i in range(3, n + 1)}))


def w3_generator(n: int) -> SymSquareVector:
    return sym_product(linear_form(n, {1: 1, 2: -1}), linear_form(n, {3: 1, 4: -1}))


def w_basis(n: int) -> list[SymSquareVector]:
    """e1e2 - e_ie_j over all other pairs i < j: a basis of the zero-sum part W."""
    return [
        SymSquareVector.from_dict(n, {(1, 2): 1, (i, j): -1})
        for i, j in monomials(n)
        if i < j and (i, j) != (1, 2)
    ]


@dataclass(frozen=True)
class Decomposition:
    n: int
    W: list
    W2: list
    W3: list

    def components(self, v: SymSquareVector) -> tuple[SymSquareVector, SymSquareVector]:
        """Split v in W as v2 + v3 with v2 in W2, v3 in W3."""
        basis = self.W2 + self.W3
        M = RatMatrix.from_rows(zip(*(b.coords for b in basis)))
        x = M.solve(v.coords)
        if x is None:
            raise ValueError("vector is not in W2 + W3")
        k = len(self.W2)
        v2 = SymSquareVector.zero(self.n)
        v3 = SymSquareVector.zero(self.n)
        for coef, b in zip(x[:k], self.W2):
            v2 = v2 + coef * b
        for coef, b in zip(x[k:], self.W3):
            v3 = v3 + coef * b
        return v2, v3

    def phi(self, a, b):
        """The map a*id on W2 plus b*id on W3."""
        def apply(v: SymSquareVector) -> SymSquareVector:
            v2, v3 = self.components(v)
            return a * v2 + b * v3
        return apply


def decompose(n: int) -> Decomposition:
    gens = sn_generators(n)
    return Decomposition(n, w_basis(n), submodule(w2_generator(n), gens), submodule(w3_generator(n), gens))


def solve_equivariant_coefficients(n: int) -> tuple[Fraction, Fraction]:
    """The (a, b) for which a*id_W2 + b*id_W3 fixes e1e2 - e3e4."""
    if n < 5:
        raise ValueError("needs n >= 5")
    dec = decompose(n)
    v = SymSquareVector.from_dict(n, {(1, 2): 1, (3, 4): -1})
    v2, v3 = dec.components(v)
    # a*v2 + b*v3 = v, one equation per monomial
    M = RatMatrix.from_rows(zip(v2.coords, v3.coords))
    sol = M.solve(v.coords)
    if sol is None:
        raise ArithmeticError("singular or inconsistent system for (a, b)")
    return sol


def verify_identities(n: int, points=((Fraction(2, 3), Fraction(-5, 7)), (Fraction(3), Fraction(11, 2)))) -> bool:
    """Check the three expansions used to pin down (a, b), at two independent rational points."""
    if n < 5:
        raise ValueError("needs n >= 5")
    L = lambda coeffs: linear_form(n, coeffs)  # noqa: E731
    rest = {i: 1 for i in range(5, n + 1)}  # e5 + ... + en

    lhs = (n - 2) * sym_product(L({1: 1, 2: -1}), e(n, 3))
    rhs = sym_product(L({1: 1, 2: -1}), L({i: 1 for i in range(3, n + 1)}))
    for i in range(4, n + 1):
        rhs = rhs + sym_product(L({1: 1, 2: -1}), L({3: 1, i: -1}))
    if lhs != rhs:
        return False

    dec = decompose(n)
    for a, b in points:
        phi = dec.phi(a, b)
        x = sym_product(L({1: 1, 3: -1}), e(n, 2))
        expect = sym_product(L({1: 1, 3: -1}), [a * p + b * q for p, q in zip(L({2: 1, 4: 1, **rest}), L({2: n - 3, 4: -1, **{i: -1 for i in rest}}))])
        if (n - 2) * phi(x) != expect:
            return False
        y = sym_product(L({2: 1, 4: -1}), e(n, 3))
        expect = sym_product(L({2: 1, 4: -1}), [a * p + b * q for p, q in zip(L({1: 1, 3: 1, **rest}), L({3: n - 3, 1: -1, **{i: -1 for i in rest}}))])
        if (n - 2) * phi(y) != expect:
            return False
        v = SymSquareVector.from_dict(n, {(1, 2): 1, (3, 4): -1})
        expect = (2 * a + (n - 4) * b) * v + (a - b) * sym_product(L({1: 1, 2: 1, 3: -1, 4: -1}), L(rest))
        if (n - 2) * phi(v) != expect:
            return False
    return True
