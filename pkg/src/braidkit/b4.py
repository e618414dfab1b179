"""The splitting B_4 = K_4 x| B_3 and the computations living on it.

K_4, the kernel of the resolvent map B_4 -> B_3, is free on
``c = s3 s1^-1`` and ``w = s2 c s2^-1``.  Braids act on K_4 by conjugation;
:data:`CONJUGATION_RULES` records that action generator by generator as
substitutions of the free group F(c, w).  The commutator subgroup of B_3 is
free on ``u = s2 s1^-1`` and ``t = s1^-1 s2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord
from .freewords import FreeWord, abelianize2, commutator, map_word, reduced_words, substitute

KW = ("c", "w")
UT = ("u", "t")
F_BASIS = ("c", "c1")


def kw(text: str) -> FreeWord:
    return FreeWord.parse(text, KW)


def ut(text: str) -> FreeWord:
    return FreeWord.parse(text, UT)


C = kw("c")
W = kw("w")
C1 = kw("w^-1 c^-1 w")

K4_IMAGES = {"c": BraidWord(4, (3, -1)), "w": BraidWord(4, (2, 3, -1, -2))}
B3_PRIME_IMAGES = {"u": BraidWord(3, (2, -1)), "t": BraidWord(3, (-1, 2))}

# x -> (x c x^-1, x w x^-1).  Generators 1 and 2 come from the known action
# of s1, s2; the inverse and s3 rules are derived and checked against the
# Garside oracle in the test suite.
CONJUGATION_RULES: dict[int, dict[str, FreeWord]] = {
    1: {"c": kw("c"), "w": kw("c^-1 w")},
    -1: {"c": kw("c"), "w": kw("c w")},
    2: {"c": kw("w"), "w": kw("w c^-1 w")},
    -2: {"c": kw("c w^-1 c"), "w": kw("c")},
    3: {"c": kw("c"), "w": kw("w c^-1")},
    -3: {"c": kw("c"), "w": kw("w c")},
}


def _as_b4(x: BraidWord) -> BraidWord:
    if x.strands not in (3, 4):
        raise ValueError("expected a braid on 3 or 4 strands")
    return x.embed(4)


def conjugation_images(x: BraidWord) -> dict[str, FreeWord]:
    """Images of c and w under v -> x v x^-1."""
    imgs = {"c": C, "w": W}
    for letter in reversed(_as_b4(x).letters):
        rule = CONJUGATION_RULES[letter]
        imgs = {s: map_word(v, rule, KW) for s, v in imgs.items()}
    return imgs


def act(x: BraidWord, v: FreeWord) -> FreeWord:
    """The reduced {c, w}-word of x v x^-1."""
    return map_word(v, conjugation_images(x), KW)


def k4_braid(v: FreeWord) -> BraidWord:
    return substitute(v, K4_IMAGES)


def b3_prime_braid(v: FreeWord) -> BraidWord:
    return substitute(v, B3_PRIME_IMAGES)


# --- splitting --------------------------------------------------------------

@dataclass(frozen=True)
class SplitPair:
    k: FreeWord
    b: BraidWord

    def braid(self) -> BraidWord:
        """Recombine as k * b in B_4."""
        return k4_braid(self.k) * self.b.embed(4)


def split(a: BraidWord) -> SplitPair:
    """Write ``a`` as (element of K_4) * (element of B_3), the K_4 part on the left."""
    if a.strands != 4:
        raise ValueError("split needs a 4-strand braid")
    k = FreeWord(KW)
    b: list[int] = []
    imgs = {"c": C, "w": W}  # conjugation by the current b

    def push(letter):
        nonlocal imgs
        rule = CONJUGATION_RULES[letter]
        imgs = {s: map_word(rule[s], imgs, KW) for s in KW}
        b.append(letter)

    for x in a.letters:
        if abs(x) < 3:
            push(x)
        elif x == 3:
            # s3 = c s1
            k = k * imgs["c"]
            push(1)
        else:
            # s3^-1 = s1^-1 c^-1
            push(-1)
            k = k * imgs["c"].inverse()
    return SplitPair(k, BraidWord(3, tuple(b)))


# --- the free basis {u, t} of B_3' ------------------------------------------

@lru_cache(maxsize=None)
def _schreier_generator(m: int) -> FreeWord:
    # y_m = s1^m s2 s1^(-m-1); the braid relation gives y_(m+2) = y_m^-1 y_(m+1)
    if m == 0:
        return ut("u")
    if m == -1:
        return ut("t")
    if m > 0:
        return _schreier_generator(m - 2).inverse() * _schreier_generator(m - 1)
    return _schreier_generator(m + 1) * _schreier_generator(m + 2).inverse()


def rewrite_b3prime(a: BraidWord) -> FreeWord:
    """Express a 3-braid of exponent sum zero in the free basis u, t."""
    if a.strands != 3:
        raise ValueError("rewrite_b3prime needs a 3-strand braid")
    out = FreeWord(UT)
    level = 0
    parts = []
    for x in a.letters:
        if x == 2:
            parts.append(_schreier_generator(level))
        elif x == -2:
            parts.append(_schreier_generator(level - 1).inverse())
        level += 1 if x > 0 else -1
    if level != 0:
        raise ValueError(f"exponent sum {level} != 0: not in the commutator subgroup")
    for p in parts:
        out = out * p
    return out


# --- the Klein quotient -----------------------------------------------------

@dataclass(frozen=True)
class KleinNF:
    """c^c_exp w^w_exp in the quotient of F(c, w) by w c = c^-1 w."""

    c_exp: int = 0
    w_exp: int = 0

    def __mul__(self, other: KleinNF) -> KleinNF:
        sign = -1 if self.w_exp % 2 else 1
        return KleinNF(self.c_exp + sign * other.c_exp, self.w_exp + other.w_exp)

    def inverse(self) -> KleinNF:
        sign = -1 if self.w_exp % 2 else 1
        return KleinNF(-sign * self.c_exp, -self.w_exp)

    def is_identity(self) -> bool:
        return self.c_exp == 0 and self.w_exp == 0

    def __str__(self) -> str:
        return str(FreeWord(KW, (("c", self.c_exp), ("w", self.w_exp))))


def klein_nf(v: FreeWord) -> KleinNF:
    out = KleinNF()
    for sym, e in v.syllables:
        out = out * (KleinNF(e, 0) if sym == "c" else KleinNF(0, e))
    return out


# --- the subgroup F = <c, c1> -----------------------------------------------

def f_member(v: FreeWord) -> bool:
    """Membership in the free subgroup generated by c and c1 = w^-1 c^-1 w.

    A reduced word lies there exactly when its w-syllables read -1, 1, -1, 1, ...
    with an even count.
    """
    if v.alphabet != KW:
        raise ValueError("expected a word over (c, w)")
    ws = [e for s, e in v.syllables if s == "w"]
    return len(ws) % 2 == 0 and all(e == (-1 if j % 2 == 0 else 1) for j, e in enumerate(ws))


def expand_f(x: FreeWord) -> FreeWord:
    """A word over (c, c1) as a reduced word over (c, w)."""
    return map_word(x, {"c": C, "c1": C1}, KW)


def rewrite_in_F(v: FreeWord) -> FreeWord:
    """Inverse of :func:`expand_f` on members of F."""
    if not f_member(v):
        raise ValueError(f"{v} is not in F")
    out: list[tuple[str, int]] = []
    syl = list(v.syllables)
    i = 0
    while i < len(syl):
        sym, e = syl[i]
        if sym == "c":
            out.append(("c", e))
            i += 1
        else:
            # w^-1 c^k w  ==  c1^-k
            out.append(("c1", -syl[i + 1][1]))
            i += 3
    return FreeWord(F_BASIS, tuple(out))


@dataclass
class ScanReport:
    max_syllables: int
    exponent_bound: int
    enumerated: int = 0
    in_f: int = 0
    counterexamples: list = None

    def __post_init__(self):
        if self.counterexamples is None:
            self.counterexamples = []

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def commutator_scan(max_syllables: int = 4, exponent_bound: int = 3) -> ScanReport:
    """Check that [w^-1, A] in F forces [w^-1, A] = [w^-1, c^k], over all bounded A in K_4."""
    report = ScanReport(max_syllables, exponent_bound)
    w_inv = W.inverse()
    kmax = exponent_bound * max_syllables
    targets = {commutator(w_inv, C ** k): k for k in range(-kmax, kmax + 1)}
    for A in reduced_words(KW, max_syllables, exponent_bound):
        report.enumerated += 1
        x = commutator(w_inv, A)
        if not f_member(x):
            continue
        report.in_f += 1
        if x not in targets:
            report.counterexamples.append(str(A))
    return report


# --- the representation on K_4^ab -------------------------------------------

@dataclass(frozen=True)
class IntMatrix2:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def identity(cls) -> IntMatrix2:
        return cls(1, 0, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> IntMatrix2:
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def __matmul__(self, o: IntMatrix2) -> IntMatrix2:
        return IntMatrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __sub__(self, o: IntMatrix2) -> IntMatrix2:
        return IntMatrix2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __pow__(self, k: int) -> IntMatrix2:
        base = self if k >= 0 else self.inverse()
        out = IntMatrix2.identity()
        for _ in range(abs(k)):
            out = out @ base
        return out

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> IntMatrix2:
        det = self.det()
        if det not in (1, -1):
            raise ValueError("not invertible over Z")
        return IntMatrix2(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def _generator_matrix(letter: int) -> IntMatrix2:
    # columns are the images of the basis classes (c, w)
    (ca, cb), (wa, wb) = (abelianize2(CONJUGATION_RULES[letter][s]) for s in KW)
    return IntMatrix2(ca, wa, cb, wb)


GENERATOR_MATRICES = {x: _generator_matrix(x) for x in CONJUGATION_RULES}


def pi(a: BraidWord) -> IntMatrix2:
    """Matrix of the conjugation action on K_4^ab in the basis (c, w)."""
    out = IntMatrix2.identity()
    for x in _as_b4(a).letters:
        out = out @ GENERATOR_MATRICES[x]
    return out
