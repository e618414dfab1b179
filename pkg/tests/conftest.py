import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from braidkit.braid import BraidWord


@pytest.fixture
def rng():
    return random.Random(12345)


def letters(n, max_size=20):
    gen = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(gen, max_size=max_size)


@st.composite
def braid_words(draw, n=None, min_n=3, max_n=6, max_size=20):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    return BraidWord(n, tuple(draw(letters(n, max_size))))


def burau(word, t=Fraction(2)):
    """Unreduced Burau matrix at a rational parameter (independent of the Garside code)."""
    n = word.strands
    M = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for x in word.letters:
        i = abs(x) - 1
        if x > 0:
            block = [[1 - t, t], [Fraction(1), Fraction(0)]]
        else:
            block = [[Fraction(0), Fraction(1)], [1 / t, 1 - 1 / t]]
        for row in M:
            a, b = row[i], row[i + 1]
            row[i] = a * block[0][0] + b * block[1][0]
            row[i + 1] = a * block[0][1] + b * block[1][1]
    return tuple(tuple(r) for r in M)
