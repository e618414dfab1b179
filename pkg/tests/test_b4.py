import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidkit import b4, garside
from braidkit.b4 import C, C1, KW, W, act, klein_nf, kw
from braidkit.braid import BraidWord, half_twist, make_constant
from braidkit.checks import random_commutator_b3, random_word
from braidkit.freewords import FreeWord, reduced_words

from conftest import braid_words

kw_words = st.lists(st.tuples(st.sampled_from(KW), st.integers(-3, 3)), max_size=6).map(lambda s: FreeWord(KW, tuple(s)))


def s(i):
    return BraidWord(4, (i,))


def test_conjugation_rules_match_braids():
    for x, rule in b4.CONJUGATION_RULES.items():
        for sym in KW:
            lhs = s(x) * b4.K4_IMAGES[sym] * ~s(x)
            assert garside.equal(lhs, b4.k4_braid(rule[sym])), (x, sym)


@settings(max_examples=100)
@given(braid_words(n=4, max_size=12), kw_words)
def test_act_matches_braid_conjugation(x, v):
    lhs = x * b4.k4_braid(v) * ~x
    assert garside.equal(lhs, b4.k4_braid(act(x, v)))


@settings(max_examples=100)
@given(braid_words(n=4, max_size=8), braid_words(n=4, max_size=8), kw_words)
def test_act_is_an_action(x, y, v):
    assert act(x * y, v) == act(x, act(y, v))
    assert act(~x, act(x, v)) == v


def test_act_examples():
    t, u = make_constant("t", 4), make_constant("u", 4)
    assert act(u, C) == W
    assert act(t, C) == kw("c w")
    assert act(BraidWord(3, (1,)), W) == kw("c^-1 w")
    with pytest.raises(ValueError):
        act(BraidWord(5, (1,)), C)


def test_klein_examples():
    t = make_constant("t", 4)
    assert klein_nf(kw("w^-1 c w c")).is_identity()
    assert str(klein_nf(act(t, kw("w^-1 c w c")))) == "c^-2 w^2"
    assert str(klein_nf(act(t, kw("c^-2 w^2")))) == "c^2 w^2"
    assert str(klein_nf(kw("w c"))) == "c^-1 w"


@given(kw_words, kw_words)
def test_klein_is_multiplicative(x, y):
    assert klein_nf(x * y) == klein_nf(x) * klein_nf(y)
    assert klein_nf(x.inverse()) == klein_nf(x).inverse()
    assert (klein_nf(x) * klein_nf(x).inverse()).is_identity()


def test_split_round_trip():
    rng = random.Random(11)
    for _ in range(300):
        a = random_word(rng, 4, 40)
        pair = b4.split(a)
        assert pair.b.strands == 3
        assert garside.equal(pair.braid(), a)


def test_split_of_k4_element():
    pair = b4.split(make_constant("c", 4))
    assert pair.k == C
    assert garside.is_trivial(pair.b)
    with pytest.raises(ValueError):
        b4.split(BraidWord(3, (1,)))


def test_rewrite_b3prime_round_trip():
    rng = random.Random(12)
    for _ in range(300):
        a = random_commutator_b3(rng, 30)
        assert garside.equal(b4.b3_prime_braid(b4.rewrite_b3prime(a)), a)
    assert str(b4.rewrite_b3prime(BraidWord(3, (2, -1)))) == "u"
    assert str(b4.rewrite_b3prime(BraidWord(3, (-1, 2)))) == "t"
    with pytest.raises(ValueError):
        b4.rewrite_b3prime(BraidWord(3, (1,)))


def test_f_membership_and_rewrite():
    members = {b4.expand_f(x) for x in reduced_words(b4.F_BASIS, 3, 3)}
    for v in reduced_words(KW, 4, 3):
        assert b4.f_member(v) == (v in members)
    for x in reduced_words(b4.F_BASIS, 3, 2):
        assert b4.rewrite_in_F(b4.expand_f(x)) == x
    with pytest.raises(ValueError):
        b4.rewrite_in_F(W)


def test_g_on_f_generators():
    g = make_constant("g", 4)
    f = lambda t: FreeWord.parse(t, b4.F_BASIS)  # noqa: E731
    assert b4.rewrite_in_F(act(g, C)) == f("c1")
    assert b4.rewrite_in_F(act(g, C1)) == f("c1^-1 c c1")
    assert b4.rewrite_in_F(act(~g, C)) == f("c c1 c^-1")


def test_scan_small():
    rep = b4.commutator_scan(2, 2)
    assert rep.ok and rep.enumerated == len(list(reduced_words(KW, 2, 2)))
    assert rep.in_f >= 5  # A = 1 and powers of c


def test_pi_examples():
    M = b4.IntMatrix2.from_rows
    assert b4.pi(s(1)) == M([[1, -1], [0, 1]])
    assert b4.pi(BraidWord(4, (-1, 2, 1))) == M([[1, 0], [1, 1]])
    assert b4.pi(half_twist(3) ** 4) == b4.IntMatrix2.identity()
    assert b4.pi(make_constant("d", 4) ** 2) == M([[1, 12], [0, 1]])
    assert str(b4.pi(s(1))) == "[[1,-1],[0,1]]"


@settings(max_examples=100)
@given(braid_words(n=4, max_size=12), braid_words(n=4, max_size=12))
def test_pi_is_multiplicative_and_invariant(a, b):
    assert b4.pi(a * b) == b4.pi(a) @ b4.pi(b)
    assert b4.pi(a).det() in (1, -1)
    if garside.equal(a, b):
        assert b4.pi(a) == b4.pi(b)


def test_pi_matches_abelianized_action():
    rng = random.Random(13)
    for _ in range(100):
        x = random_word(rng, 4, 12)
        M = b4.pi(x)
        for sym, col in (("c", (M.a, M.c)), ("w", (M.b, M.d))):
            v = act(x, FreeWord.gen(KW, sym))
            assert (v.exponent("c"), v.exponent("w")) == col


def test_int_matrix():
    M = b4.IntMatrix2(2, 1, 1, 1)
    assert M @ M.inverse() == b4.IntMatrix2.identity()
    assert M ** -2 @ M ** 2 == b4.IntMatrix2.identity()
    with pytest.raises(ValueError):
        b4.IntMatrix2(2, 0, 0, 1).inverse()
