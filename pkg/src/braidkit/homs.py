"""Homomorphisms from finitely presented groups into braid groups.

A :class:`GroupHom` is a map on generators.  :func:`verify` substitutes every
relator and compares both sides with the Garside normal form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

from . import garside
from .braid import BraidWord, cycle_delta, half_twist
from .freewords import FreeWord


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[FreeWord, FreeWord], ...] = ()
    name: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for lhs, rhs in self.relators:
            if lhs.alphabet != gens or rhs.alphabet != gens:
                raise ValueError("relator uses a foreign alphabet")

    def word(self, text: str) -> FreeWord:
        return FreeWord.parse(text, self.generators)

    def relator(self, lhs: str, rhs: str) -> tuple[FreeWord, FreeWord]:
        return self.word(lhs), self.word(rhs)


def artin_generators(n: int) -> tuple[str, ...]:
    return tuple(f"s{i}" for i in range(1, n))


def artin_presentation(n: int) -> Presentation:
    gens = artin_generators(n)
    rels = []
    for i in range(1, n):
        for j in range(i + 1, n):
            a, b = f"s{i}", f"s{j}"
            if j - i > 1:
                rels.append((f"{a} {b}", f"{b} {a}"))
            else:
                rels.append((f"{a} {b} {a}", f"{b} {a} {b}"))
    pres = Presentation(gens, (), f"B{n}")
    return Presentation(gens, tuple(pres.relator(l, r) for l, r in rels), f"B{n}")


def b3_garside_presentation() -> Presentation:
    """B_3 on the half twist and the cycle: Delta^2 = delta^3."""
    pres = Presentation(("Delta", "delta"), (), "B3")
    return Presentation(pres.generators, (pres.relator("Delta^2", "delta^3"),), "B3")


def artin_b2_presentation() -> Presentation:
    pres = Presentation(("x", "y"), (), "A(B2)")
    return Presentation(pres.generators, (pres.relator("x y x y", "y x y x"),), "A(B2)")


def artin_word(b: BraidWord) -> FreeWord:
    """A braid word as a word over the generators ``s1 .. s{n-1}``."""
    gens = artin_generators(b.strands)
    return FreeWord(gens, tuple((f"s{abs(x)}", 1 if x > 0 else -1) for x in b.letters))


@dataclass
class GroupHom:
    domain: Presentation
    images: Mapping[str, BraidWord]
    strands: int = field(default=0)

    def __post_init__(self):
        missing = [g for g in self.domain.generators if g not in self.images]
        if missing:
            raise ValueError(f"no image for generators {missing}")
        extra = [g for g in self.images if g not in self.domain.generators]
        if extra:
            raise ValueError(f"unknown generators {extra}")
        ns = {w.strands for w in self.images.values()}
        if self.strands == 0:
            if len(ns) != 1:
                raise ValueError("images must share one strand count")
            self.strands = ns.pop()
        elif ns - {self.strands}:
            raise ValueError(f"images must live on {self.strands} strands")
        self.images = dict(self.images)

    def __call__(self, word: FreeWord | BraidWord) -> BraidWord:
        if isinstance(word, BraidWord):
            return apply_braid(self, word)
        return apply(self, word)


def apply(h: GroupHom, word: FreeWord) -> BraidWord:
    letters: list[int] = []
    for sym, e in word.syllables:
        if sym not in h.images:
            raise ValueError(f"unknown generator {sym!r}")
        img = h.images[sym].letters
        if e < 0:
            img = tuple(-x for x in reversed(img))
        letters.extend(img * abs(e))
    return BraidWord(h.strands, tuple(letters))


def apply_braid(h: GroupHom, b: BraidWord) -> BraidWord:
    """Apply a hom whose domain is the Artin presentation of B_n to a braid word."""
    if h.domain.generators != artin_generators(b.strands):
        raise ValueError(f"domain of {h.domain.name or 'hom'} is not the Artin presentation of B{b.strands}")
    return apply(h, artin_word(b))


def verify(h: GroupHom) -> bool:
    return all(garside.equal(apply(h, lhs), apply(h, rhs)) for lhs, rhs in h.domain.relators)


def failing_relators(h: GroupHom) -> list[tuple[FreeWord, FreeWord]]:
    return [(l, r) for l, r in h.domain.relators if not garside.equal(apply(h, l), apply(h, r))]


def compose(g: GroupHom, f: GroupHom) -> GroupHom:
    """``g`` after ``f``; ``g`` must be defined on the Artin presentation of f's target."""
    return GroupHom(f.domain, {x: apply_braid(g, img) for x, img in f.images.items()}, g.strands)


# --- named maps -------------------------------------------------------------

def from_letters(n_domain: int, images: Mapping[int, BraidWord], strands: int) -> GroupHom:
    return GroupHom(artin_presentation(n_domain), {f"s{i}": w for i, w in images.items()}, strands)


def identity_hom(n: int) -> GroupHom:
    return from_letters(n, {i: BraidWord(n, (i,)) for i in range(1, n)}, n)


def mirror(n: int) -> GroupHom:
    """The automorphism inverting every Artin generator."""
    return from_letters(n, {i: BraidWord(n, (-i,)) for i in range(1, n)}, n)


def inclusion(m: int, n: int) -> GroupHom:
    """Standard embedding B_m -> B_n on the first m strands."""
    return from_letters(m, {i: BraidWord(n, (i,)) for i in range(1, m)}, n)


def resolvent() -> GroupHom:
    """B_4 -> B_3 sending sigma_1 and sigma_3 to sigma_1, sigma_2 to sigma_2."""
    return from_letters(4, {1: BraidWord(3, (1,)), 2: BraidWord(3, (2,)), 3: BraidWord(3, (1,))}, 3)


def inner(x: BraidWord) -> GroupHom:
    n = x.strands
    xinv = ~x
    return from_letters(n, {i: x * BraidWord(n, (i,)) * xinv for i in range(1, n)}, n)


def transvection(f: GroupHom, tau: Mapping[str, int]) -> GroupHom:
    """Multiply each generator image by Delta^(2 k_g); ``tau`` gives k_g per generator."""
    tau = {g: int(tau.get(g, 0)) for g in f.domain.generators}
    for lhs, rhs in f.domain.relators:
        left = sum(tau[s] * e for s, e in lhs.syllables)
        right = sum(tau[s] * e for s, e in rhs.syllables)
        if left != right:
            raise ValueError(f"tau does not factor through the abelianization: relator {lhs} = {rhs}")
    full_twist = half_twist(f.strands) ** 2
    return GroupHom(f.domain, {g: f.images[g] * full_twist ** tau[g] for g in f.domain.generators}, f.strands)


def b3_to_b4_family(k: int, l: int, X: BraidWord, f: GroupHom, check: bool = True) -> GroupHom:
    """Homomorphism from <Delta, delta | Delta^2 = delta^3> to B_4.

    Delta -> f(D3^(6k+1) D4^(6l)),  delta -> f(X d3 X^-1 D3^(4k) D4^(4l)),
    where D3, d3 are the half twist and cycle of B_3 embedded in B_4.
    """
    if X.strands != 3:
        raise ValueError("X must be a 3-strand braid")
    if f.strands != 4 or f.domain.generators != artin_generators(4):
        raise ValueError("f must be an endomorphism of B4")
    D3, d3, D4 = half_twist(3), cycle_delta(3), half_twist(4)
    big_delta = (D3 ** (6 * k + 1)).embed(4) * D4 ** (6 * l)
    small_delta = (X * d3 * ~X * D3 ** (4 * k)).embed(4) * D4 ** (4 * l)
    h = GroupHom(b3_garside_presentation(), {"Delta": apply_braid(f, big_delta), "delta": apply_braid(f, small_delta)}, 4)
    if check and not verify(h):
        raise RuntimeError(f"relator fails for k={k}, l={l}, X={X}")
    return h


# --- text format ------------------------------------------------------------

class HomSpecError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def parse_hom_spec(text: str) -> GroupHom:
    """Parse a homomorphism description.

    One directive per line (``|`` also separates lines; ``#`` starts a comment)::

        domain: B3            # name; "B<n>" alone means the Artin presentation
        gens: a b             # generator names (optional for B<n>)
        rel: a a = b b b      # relator, repeatable; words use "x^-1" syllables
        a -> 1 2 1            # braid image of a generator
        b -> 2 1
        target_strands: 3
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for piece in raw.split("#", 1)[0].split("|"):
            if piece.strip():
                lines.append((lineno, piece.strip()))

    domain_name, gens, rels, images, strands = None, None, [], {}, None
    for lineno, line in lines:
        if "->" in line:
            sym, _, body = line.partition("->")
            sym = sym.strip()
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", sym):
                raise HomSpecError(lineno, f"bad generator name {sym!r}")
            if sym in images:
                raise HomSpecError(lineno, f"duplicate image for {sym!r}")
            images[sym] = (lineno, body.strip())
            continue
        key, sep, val = line.partition(":")
        key, val = key.strip(), val.strip()
        if not sep:
            raise HomSpecError(lineno, f"expected 'key: value' or 'gen -> word', got {line!r}")
        if key == "domain":
            domain_name = val
        elif key == "gens":
            gens = tuple(val.split())
            if not gens or len(set(gens)) != len(gens):
                raise HomSpecError(lineno, "gens must list distinct names")
        elif key == "rel":
            lhs, eq, rhs = val.partition("=")
            if not eq:
                raise HomSpecError(lineno, "relator needs '='")
            rels.append((lineno, lhs, rhs))
        elif key == "target_strands":
            try:
                strands = int(val)
            except ValueError:
                raise HomSpecError(lineno, f"bad strand count {val!r}") from None
            if strands < 1:
                raise HomSpecError(lineno, "strand count must be positive")
        else:
            raise HomSpecError(lineno, f"unknown key {key!r}")

    last = lines[-1][0] if lines else 1
    if strands is None:
        raise HomSpecError(last, "missing target_strands")
    if gens is None:
        m = re.fullmatch(r"B(\d+)", domain_name or "")
        if not m:
            raise HomSpecError(last, "missing gens (only 'domain: B<n>' may omit them)")
        pres = artin_presentation(int(m.group(1)))
        if rels:
            raise HomSpecError(rels[0][0], "extra relators not allowed with the implicit Artin presentation")
    else:
        base = Presentation(gens, (), domain_name or "")
        parsed = []
        for lineno, lhs, rhs in rels:
            try:
                parsed.append(base.relator(lhs, rhs))
            except ValueError as exc:
                raise HomSpecError(lineno, str(exc)) from None
        pres = Presentation(gens, tuple(parsed), domain_name or "")

    braid_images = {}
    for sym, (lineno, body) in images.items():
        if sym not in pres.generators:
            raise HomSpecError(lineno, f"{sym!r} is not a generator")
        try:
            braid_images[sym] = BraidWord.parse(body, strands)
        except ValueError as exc:
            raise HomSpecError(lineno, str(exc)) from None
    missing = [g for g in pres.generators if g not in braid_images]
    if missing:
        raise HomSpecError(last, f"no image for {missing}")
    return GroupHom(pres, braid_images, strands)
