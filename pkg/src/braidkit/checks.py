"""The catalogue of identities run by ``braidkit verify-paper``.

Each check returns ``(ok, detail)``.  Randomised checks draw from a
:class:`random.Random` seeded by the caller, so a run is reproducible and a
failing sample is printed as a word that can be pasted back into the CLI.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable

from . import b4, garside, homs, perm, pure, specht
from .braid import (
    BraidWord,
    band_generator,
    cycle_delta,
    cycle_gamma,
    exponent_sum,
    half_twist,
    make_constant,
    permutation_of,
)
from .freewords import FreeWord, commutator, reduced_words
from .perm import Permutation

DEFAULT_SEED = 20240611


def random_word(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> BraidWord:
    length = rng.randint(min_len, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_pure(rng: random.Random, n: int, factors: int) -> BraidWord:
    out = BraidWord(n)
    for _ in range(factors):
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        out = out * band_generator(i, j, n) ** rng.choice((2, -2))
    return out


def random_commutator_b3(rng: random.Random, max_len: int) -> BraidWord:
    """A random 3-braid of exponent sum zero."""
    half = rng.randint(0, max_len // 2)
    signs = [1] * half + [-1] * half
    rng.shuffle(signs)
    return BraidWord(3, tuple(s * rng.randint(1, 2) for s in signs))


def _eq(a, b):
    return garside.equal(a, b)


B4 = {name: make_constant(name, 4) for name in ("c", "w", "u", "t", "d", "g")}


def _k(text: str) -> FreeWord:
    return b4.kw(text)


def _s(i: int, n: int = 4) -> BraidWord:
    return BraidWord(n, (i,))


# --- individual checks ------------------------------------------------------

def check_delta_powers(rng):
    bad = [n for n in range(3, 8) if not (_eq(cycle_delta(n) ** n, half_twist(n) ** 2) and _eq(cycle_gamma(n) ** (n - 1), half_twist(n) ** 2))]
    return not bad, f"n=3..7, failing n: {bad}" if bad else "n=3..7"


def check_full_twist_central(rng):
    bad = []
    for n in range(3, 7):
        D2 = half_twist(n) ** 2
        bad += [(n, i) for i in range(1, n) if not _eq(_s(i, n) * D2, D2 * _s(i, n))]
    return not bad, f"failing (n, i): {bad}" if bad else "n=3..6, all i"


def check_b3_prime_action(rng):
    c, w, u, t = (B4[x] for x in "cwut")
    pairs = [
        (u * c * ~u, w),
        (u * w * ~u, w ** 2 * ~c * w),
        (t * c * ~t, c * w),
        (t * w * ~t, c * w ** 2),
    ]
    ok = all(_eq(a, b) for a, b in pairs)
    return ok, "u c u^-1 = w, u w u^-1 = w^2 c^-1 w, t c t^-1 = c w, t w t^-1 = c w^2"


def check_sigma_action(rng):
    c, w = B4["c"], B4["w"]
    s1, s2 = _s(1), _s(2)
    pairs = [(s1 * c * ~s1, c), (s1 * w * ~s1, ~c * w), (s2 * c * ~s2, w), (s2 * w * ~s2, w * ~c * w)]
    return all(_eq(a, b) for a, b in pairs), "s1, s2 conjugation on c, w"


def check_conjugation_rules(rng):
    bad = []
    for x, rule in b4.CONJUGATION_RULES.items():
        for sym in b4.KW:
            lhs = _s(x) * b4.K4_IMAGES[sym] * ~_s(x)
            if not _eq(lhs, b4.k4_braid(rule[sym])):
                bad.append((x, sym))
    return not bad, f"failing: {bad}" if bad else "all six generator rules agree with the braid group"


def check_d_commutator(rng):
    c, u, t, d = (B4[x] for x in "cutd")
    a, b = ~c * t, ~u
    return _eq(d, a * b * ~a * ~b), "d = [c^-1 t, u^-1]"


def check_g_commutator(rng):
    u, t, g = (B4[x] for x in "utg")
    return _eq(g, t * ~u * ~t * u), "g = [t, u^-1]"


def check_g_resolvent(rng):
    return _eq(homs.resolvent()(B4["d"]), make_constant("g", 3)), "R(d) = g"


def check_gcg(rng):
    c, w, g = (B4[x] for x in "cwg")
    return _eq(g * c * ~g, ~w * ~c * w), "g c g^-1 = w^-1 c^-1 w"


def check_gc_relation(rng):
    c, g = B4["c"], B4["g"]
    return _eq(~g * c * g * c, c * g * c * ~g), "g^-1 c g c = c g c g^-1"


def check_d2_w(rng):
    c, w, d = (B4[x] for x in "cwd")
    ok = _eq(d ** 2 * w * d ** -2, c ** 6 * w * c ** 6)
    ok &= all(_eq(_s(3) ** k * w * _s(1) ** -k, w) for k in range(-6, 7))
    return ok, "d2 w d-2 = c6 w c6 and s3^k w s1^-k = w for |k| <= 6"


def check_d_inverts_c(rng):
    c, d = B4["c"], B4["d"]
    return _eq(d * c * ~d, ~c), "d c d^-1 = c^-1"


def check_gcgc(rng):
    c, g = B4["c"], B4["g"]
    return _eq(g * c * g * c, c * g * c * g), "g c g c = c g c g"


def check_klein(rng):
    t = B4["t"]
    r0 = b4.klein_nf(_k("w^-1 c w c"))
    r1 = b4.klein_nf(b4.act(t, _k("w^-1 c w c")))
    r2 = b4.klein_nf(b4.act(t, _k("c^-2 w^2")))
    c4 = r1 * r2.inverse()
    ok = r0.is_identity() and (r1.c_exp, r1.w_exp) == (-2, 2) and (r2.c_exp, r2.w_exp) == (2, 2) and (c4.c_exp, c4.w_exp) == (-4, 0)
    return ok, f"w^-1cwc -> {r0}, t-conjugate -> {r1}, again -> {r2}, so c^4 = 1"


def check_f_generators(rng):
    g = B4["g"]
    r1 = b4.rewrite_in_F(b4.act(g, b4.C))
    r2 = b4.rewrite_in_F(b4.act(g, b4.C1))
    r3 = b4.rewrite_in_F(b4.act(~g, b4.C))
    f = lambda s: FreeWord.parse(s, b4.F_BASIS)  # noqa: E731
    ok = r1 == f("c1") and r2 == f("c1^-1 c c1") and r3 == f("c c1 c^-1")
    return ok, f"g(c) = {r1}, g(c1) = {r2}, g^-1(c) = {r3}"


def f_membership_oracle(max_syllables: int = 3, max_exp: int = 3) -> set[FreeWord]:
    """All reduced {c, w}-words obtained by expanding bounded words in c, c1."""
    return {b4.expand_f(x) for x in reduced_words(b4.F_BASIS, max_syllables, max_exp)}


def check_f_membership(rng):
    members = f_membership_oracle()
    bad = [str(v) for v in reduced_words(b4.KW, 4, 3) if b4.f_member(v) != (v in members)]
    return not bad, f"disagreements: {bad[:5]}" if bad else "all words with <= 4 syllables, |exp| <= 3"


def check_commutator_scan(rng):
    rep = b4.commutator_scan(4, 3)
    return rep.ok, f"{rep.enumerated} words, {rep.in_f} in F, counterexamples: {rep.counterexamples[:5]}"


def check_pi(rng):
    M = b4.IntMatrix2.from_rows
    ok = (
        b4.pi(_s(1)) == M([[1, -1], [0, 1]])
        and b4.pi(BraidWord(4, (-1, 2, 1))) == M([[1, 0], [1, 1]])
        and b4.pi(half_twist(3).embed(4) ** 4) == b4.IntMatrix2.identity()
        and b4.pi(B4["d"] ** 2) == M([[1, 12], [0, 1]])
    )
    return ok, "pi(s1) = S1, pi(s1^-1 s2 s1) = S2, pi(D3^4) = I, pi(d^2) = [[1,12],[0,1]]"


def check_pi_intertwiner(rng):
    d2 = b4.pi(B4["d"] ** 2)
    bad = []
    for k, p, q in product(range(-3, 4), range(-2, 3), range(-2, 3)):
        P = b4.IntMatrix2(k, p, 0, q)
        if (d2 ** k) @ P - P @ d2 != b4.IntMatrix2(0, 12 * k * (q - 1), 0, 0):
            bad.append((k, p, q))
    return not bad, f"failing (k, p, q): {bad[:5]}" if bad else "pi(d^2k) P - P pi(d^2) = [[0, 12k(q-1)], [0, 0]]"


def check_split(rng, samples=500):
    for _ in range(samples):
        a = random_word(rng, 4, 40)
        if not _eq(b4.split(a).braid(), a):
            return False, f"counterexample: {a}"
    return True, f"{samples} random words, length <= 40"


def check_b3prime(rng, samples=500):
    for _ in range(samples):
        a = random_commutator_b3(rng, 30)
        if not _eq(b4.b3_prime_braid(b4.rewrite_b3prime(a)), a):
            return False, f"counterexample: {a}"
    return True, f"{samples} random words of exponent sum 0, length <= 30"


def check_band_abelianization(rng):
    n = 5
    bad = [(i, j) for i, j in combinations(range(1, n + 1), 2) if pure.abelianize_pure(band_generator(i, j, n) ** 2) != pure.AbelianVector.unit(n, i, j)]
    return not bad, f"failing pairs: {bad}" if bad else "sigma_ij^2 -> A_ij, n=5"


def check_c_squared(rng):
    v = pure.abelianize_pure(make_constant("c", 5) ** -2)
    target = pure.AbelianVector.from_dict(5, {(1, 2): 1, (3, 4): -1})
    return v == target, f"c^-2 -> {v}"


def check_tau(rng):
    ok = all(pure.is_in_Jn(make_constant("tau", n)) for n in (5, 6))
    return ok, "tau in J_n for n=5,6"


def check_conjugation_invariance(rng, samples=200):
    for _ in range(samples):
        n = rng.randint(5, 6)
        a = random_pure(rng, n, rng.randint(1, 4))
        x = random_word(rng, n, 10)
        if pure.abelianize_pure(x * a * ~x).total() != pure.abelianize_pure(a).total():
            return False, f"counterexample: a={a}, x={x}"
    return True, f"{samples} random (pure braid, conjugator) pairs"


def check_specht_dimensions(rng):
    bad = []
    for n in (5, 6, 7):
        dec = specht.decompose(n)
        dims = (len(specht.span_basis(dec.W, n)), len(dec.W2), len(dec.W3), len(specht.span_basis(dec.W2 + dec.W3, n)))
        if dims != (n * (n - 1) // 2 - 1, n - 1, n * (n - 3) // 2, n * (n - 1) // 2 - 1):
            bad.append((n, dims))
    return not bad, f"failing: {bad}" if bad else "dim W = C(n,2)-1 = dim W2 + dim W3, n=5,6,7"


def check_commutant(rng):
    dims = {n: specht.commutant_dimension(specht.decompose(n).W, specht.an_generators(n)) for n in (5, 6, 7)}
    return all(v == 2 for v in dims.values()), f"commutant dimensions {dims}"


def check_coefficients(rng):
    sols = {n: specht.solve_equivariant_coefficients(n) for n in (5, 6, 7)}
    return all(s == (1, 1) for s in sols.values()), "a = b = 1 for n=5,6,7"


def check_sym2_identity(rng):
    return all(specht.verify_identities(n) for n in (5, 6, 7)), "expansions of phi_* hold for n=5,6,7"


def check_outer_automorphism(rng):
    P = lambda s: Permutation.parse(s, 6)  # noqa: E731
    H = perm.closure([P("(1 2)(3 4)"), P("(1 2)(5 6)")])
    NH = {perm.nu(h) for h in H}
    ok = (
        H == {P("()"), P("(1 2)(3 4)"), P("(1 2)(5 6)"), P("(3 4)(5 6)")}
        and not perm.common_fixed_points(H)
        and NH == {P("()"), P("(1 2)(3 4)"), P("(1 3)(2 4)"), P("(1 4)(2 3)")}
        and perm.common_fixed_points(NH) == {5, 6}
    )
    return ok, "mu'(H) has no common fixed point; its nu-image fixes 5 and 6"


def check_klein_four_lift(rng):
    c, D = make_constant("c", 4), half_twist(4)
    imgs = {permutation_of(x) for x in (BraidWord(4), c, D, c * D)}
    P = lambda s: Permutation.parse(s, 4)  # noqa: E731
    return imgs == {P("()"), P("(1 2)(3 4)"), P("(1 4)(2 3)"), P("(1 3)(2 4)")}, "mu({1, c, D4, c D4}) = V4"


def check_named_homs(rng):
    R, iota, L = homs.resolvent(), homs.inclusion(3, 4), homs.mirror(4)
    ok = homs.verify(R) and homs.verify(L) and homs.verify(iota)
    ok &= all(_eq(R(iota.images[g]), BraidWord(3, (i,))) for i, g in enumerate(homs.artin_generators(3), 1))
    ok &= all(permutation_of(L.images[g]) == permutation_of(_s(i)) for i, g in enumerate(homs.artin_generators(4), 1))
    ok &= all(exponent_sum(L.images[g]) == -1 for g in homs.artin_generators(4))
    ok &= not homs.verify(homs.from_letters(3, {1: _s(1, 3), 2: _s(2, 3) ** 2}, 3))
    return ok, "R, Lambda, iota are homomorphisms; R iota = id; mu Lambda = mu; e Lambda = -e"


def check_family(rng):
    fs = {"id": homs.identity_hom(4), "Lambda": homs.mirror(4), "inner(D4)": homs.inner(half_twist(4))}
    Xs = {"1": BraidWord(3), "s1": BraidWord(3, (1,)), "delta3": cycle_delta(3)}
    bad = []
    count = 0
    for k, l in product(range(-2, 3), repeat=2):
        for xn, X in Xs.items():
            for fn, f in fs.items():
                count += 1
                if not homs.verify(homs.b3_to_b4_family(k, l, X, f, check=False)):
                    bad.append((k, l, xn, fn))
    return not bad, f"failing: {bad[:5]}" if bad else f"{count} homomorphisms verified"


@dataclass(frozen=True)
class Check:
    key: str
    label: str
    run: Callable


CHECKS = [
    Check("delta_gamma_powers", "delta^n = gamma^(n-1) = Delta^2", check_delta_powers),
    Check("full_twist_central", "Delta^2 commutes with every sigma_i", check_full_twist_central),
    Check("b3prime_action", "u, t act on c, w", check_b3_prime_action),
    Check("sigma_action", "sigma_1, sigma_2 act on c, w", check_sigma_action),
    Check("conjugation_rules", "derived conjugation rules", check_conjugation_rules),
    Check("d_commutator", "d = [c^-1 t, u^-1]", check_d_commutator),
    Check("g_commutator", "g = [t, u^-1]", check_g_commutator),
    Check("g_resolvent", "g = R(d)", check_g_resolvent),
    Check("g_conjugates_c", "g c g^-1 = w^-1 c^-1 w", check_gcg),
    Check("g_c_relation", "g^-1 c g c = c g c g^-1", check_gc_relation),
    Check("d2_conjugates_w", "d2 w d-2 = c6 w c6", check_d2_w),
    Check("d_inverts_c", "d c d^-1 = c^-1", check_d_inverts_c),
    Check("gcgc", "g c g c = c g c g", check_gcgc),
    Check("klein_quotient", "Klein quotient forces c^4 = 1", check_klein),
    Check("f_generators", "conjugation by g on F = <c, c1>", check_f_generators),
    Check("f_membership", "F-membership criterion vs enumeration", check_f_membership),
    Check("commutator_scan", "[w^-1, A] in F implies A-part is a power of c", check_commutator_scan),
    Check("pi_matrices", "matrices of pi", check_pi),
    Check("pi_intertwiner", "pi(d^2k) P - P pi(d^2)", check_pi_intertwiner),
    Check("split_roundtrip", "B4 = K4 x| B3 round trip", check_split),
    Check("b3prime_roundtrip", "B3' free on u, t round trip", check_b3prime),
    Check("band_abelianization", "sigma_ij^2 -> A_ij", check_band_abelianization),
    Check("c_squared_abelianization", "c^-2 -> A12 - A34", check_c_squared),
    Check("tau_in_Jn", "tau in J_n", check_tau),
    Check("conjugation_invariance", "coordinate sum is conjugation invariant", check_conjugation_invariance),
    Check("sym2_dimensions", "W = W2 + W3 dimensions", check_specht_dimensions),
    Check("commutant", "commutant of W under A_n has dimension 2", check_commutant),
    Check("equivariant_coefficients", "a = b = 1", check_coefficients),
    Check("sym2_identities", "Sym^2 V identities", check_sym2_identity),
    Check("outer_automorphism_s6", "nu moves fixed points of mu'(H)", check_outer_automorphism),
    Check("klein_four_lift", "mu of {1, c, D4, c D4}", check_klein_four_lift),
    Check("named_homs", "named homomorphisms", check_named_homs),
    Check("b3_to_b4_family", "B3 -> B4 family", check_family),
]


@dataclass
class Result:
    key: str
    label: str
    ok: bool
    detail: str


def run_checks(seed: int = DEFAULT_SEED, keys=None) -> list[Result]:
    results = []
    for chk in CHECKS:
        if keys is not None and chk.key not in keys:
            continue
        rng = random.Random(f"{seed}:{chk.key}")
        try:
            ok, detail = chk.run(rng)
        except Exception as exc:  # a crash is a failed check, reported like one
            ok, detail = False, f"error: {exc!r}"
        results.append(Result(chk.key, chk.label, bool(ok), detail))
    return results
