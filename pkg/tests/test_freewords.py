import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidkit import garside
from braidkit.b4 import K4_IMAGES, KW
from braidkit.freewords import FreeWord, abelianize2, commutator, map_word, reduce_concat, reduced_words, substitute

AB = ("a", "b")

syllables = st.lists(st.tuples(st.sampled_from(AB), st.integers(-3, 3)), max_size=8)
words = syllables.map(lambda s: FreeWord(AB, tuple(s)))


def W(text):
    return FreeWord.parse(text, AB)


def test_parse_and_reduce():
    assert str(W("a a^-1 b")) == "b"
    assert str(W("a b b^-1 a^-1")) == "1"
    assert str(W("a^2 a^3 b^-1")) == "a^5 b^-1"
    assert W("1") == W("")
    with pytest.raises(ValueError):
        W("c")
    with pytest.raises(ValueError):
        W("a^x")


def test_reduce_concat():
    assert reduce_concat(W("a b"), W("b^-1 a")) == W("a^2")
    assert reduce_concat(W(""), W("a")) == W("a")
    with pytest.raises(ValueError):
        reduce_concat(W("a"), FreeWord.parse("c", KW))


@given(words, words, words)
def test_group_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == x.identity()
    assert len(x * y) <= len(x) + len(y)


@given(words)
def test_reduced(x):
    for (s1, e1), (s2, e2) in zip(x.syllables, x.syllables[1:]):
        assert s1 != s2
    assert all(e != 0 for _, e in x.syllables)


@given(words, words)
def test_map_word_is_homomorphism(x, y):
    images = {"a": W("a b"), "b": W("b^-1 a^2")}
    assert map_word(x * y, images) == map_word(x, images) * map_word(y, images)
    assert abelianize2(x * y) == tuple(p + q for p, q in zip(abelianize2(x), abelianize2(y)))


@given(words, words)
def test_substitute_is_homomorphism(x, y):
    from braidkit.braid import BraidWord

    images = {"a": BraidWord(3, (1,)), "b": BraidWord(3, (2, -1))}
    lhs = substitute(x * y, images)
    rhs = substitute(x, images) * substitute(y, images)
    assert garside.equal(lhs, rhs)


def test_commutator():
    assert str(commutator(W("a"), W("b"))) == "a b a^-1 b^-1"
    assert commutator(W("a"), W("a^3")) == W("")


def test_reduced_words_count():
    # 2 letters, exponents +-1: 1 + 2*2 + 2*2*2 words with <= 2 syllables
    assert len(list(reduced_words(AB, 2, 1))) == 1 + 4 + 8
    got = list(reduced_words(AB, 3, 2))
    assert len(got) == len(set(got))


def test_k4_images_are_a_free_basis_on_samples():
    # a nontrivial reduced {c, w}-word never maps to the trivial braid
    rng = random.Random(5)
    for _ in range(500):
        syl = []
        for _ in range(rng.randint(1, 6)):
            sym = rng.choice(KW)
            if syl and syl[-1][0] == sym:
                continue
            syl.append((sym, rng.choice([-2, -1, 1, 2])))
        v = FreeWord(KW, tuple(syl))
        assert v
        assert not garside.is_trivial(substitute(v, K4_IMAGES))
