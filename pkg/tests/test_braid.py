import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidkit import garside
from braidkit.braid import (
    BraidWord,
    band_generator,
    concat,
    delete_strands,
    exponent_sum,
    half_twist,
    invert,
    make_constant,
    permutation_of,
    shift2,
)
from braidkit.perm import Permutation

from conftest import braid_words


def B(n, *letters):
    return BraidWord(n, letters)


def transposition_product(word):
    """Oracle: multiply the letters' transpositions in reading order."""
    p = Permutation.identity(word.strands)
    for x in word.letters:
        p = p * Permutation.transposition(word.strands, abs(x), abs(x) + 1)
    return p


def test_validation():
    with pytest.raises(ValueError):
        B(3, 3)
    with pytest.raises(ValueError):
        B(3, 0)
    with pytest.raises(ValueError):
        BraidWord(0)


def test_concat():
    assert concat(B(3, 1), B(3, 2)).letters == (1, 2)
    assert concat(B(4), B(4, 3)).letters == (3,)
    assert concat(B(3, 1, -1), B(3)).letters == (1, -1)
    with pytest.raises(ValueError):
        concat(B(3, 1), B(4, 1))


def test_invert():
    assert invert(B(3, 1, 2)).letters == (-2, -1)
    assert invert(B(3)).letters == ()
    assert invert(B(4, 3, -1)).letters == (1, -3)


def test_exponent_sum():
    assert exponent_sum(half_twist(4)) == 6
    assert exponent_sum(make_constant("c", 4)) == 0
    tau = make_constant("tau", 5)
    assert exponent_sum(tau) == 0
    assert sum(1 if x > 0 else -1 for x in tau.letters) == 0


def test_permutation_of():
    assert permutation_of(make_constant("c", 4)) == transposition_product(make_constant("c", 4))
    assert permutation_of(make_constant("c", 4)) == Permutation.parse("(1 2)(3 4)", 4)
    assert permutation_of(half_twist(4)) == Permutation.parse("(1 4)(2 3)", 4)
    assert permutation_of(B(4)).is_identity()


def test_constants():
    assert make_constant("delta", 3).letters == (2, 1)
    assert make_constant("Delta", 3).letters == (1, 2, 1)
    assert make_constant("Delta", 4).letters == (1, 2, 3, 1, 2, 1)
    assert make_constant("gamma", 4).letters == (1, 3, 2, 1)
    assert make_constant("w", 4).letters == (2, 3, -1, -2)
    assert make_constant("u", 3).letters == (2, -1)
    assert make_constant("t", 3).letters == (-1, 2)
    assert make_constant("c", 4).letters == (3, -1)
    assert make_constant("c_i:4", 6).letters == (-1, 4)
    assert make_constant("sigma_ij:1,3", 4).letters == (2, 1, -2)
    assert make_constant("sigma_ij:2,3", 4).letters == (2,)
    assert make_constant("d", 4).letters == (1, 2, 3, 1, 2, 1, -1, -1, -1, -3, -3, -3)
    assert make_constant("g", 3).letters == (1, 2, 1, 1, 2, 1) + (-1,) * 6
    assert make_constant("h", 4).letters == (-1, -2, -1) * 2 + (3, 2, 1, 1, 2, 3)
    assert make_constant("tau", 5).letters == (1,) * 6 + (-3, -4, -3) * 2


@pytest.mark.parametrize("name,n", [("d", 5), ("d", 3), ("c", 3), ("w", 3), ("nope", 4), ("c_i:2", 5), ("sigma_ij:3,2", 4)])
def test_constant_errors(name, n):
    with pytest.raises(ValueError):
        make_constant(name, n)


def test_shift2():
    assert shift2(half_twist(3)) == B(5, 3, 4, 3)
    assert shift2(B(1)) == B(3)
    assert shift2(B(2, -1)).letters == (-3,)


def test_delete_strands():
    s1sq = B(4, 1, 1)
    assert delete_strands(s1sq, {1, 2}) == B(2, 1, 1)
    assert delete_strands(s1sq, {3, 4}) == B(2)
    # hand traced: strands 1 and 3 meet twice, once per copy of sigma_13
    assert delete_strands(band_generator(1, 3, 4) ** 2, {1, 3}) == B(2, 1, 1)


@given(braid_words(), braid_words())
def test_exponent_sum_additive(a, b):
    if a.strands == b.strands:
        assert exponent_sum(a * b) == exponent_sum(a) + exponent_sum(b)


@given(st.integers(3, 6).flatmap(lambda n: st.tuples(braid_words(n=n), braid_words(n=n))))
def test_permutation_multiplicative(pair):
    a, b = pair
    assert permutation_of(a * b) == permutation_of(a) * permutation_of(b)
    assert permutation_of(~a) == permutation_of(a).inverse()
    assert permutation_of(a) == transposition_product(a)


def test_band_generator_permutations():
    for n in range(2, 8):
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                assert permutation_of(band_generator(i, j, n)) == Permutation.transposition(n, i, j)


def test_half_twist_exponent():
    for n in range(2, 9):
        assert exponent_sum(half_twist(n)) == n * (n - 1) // 2


@settings(max_examples=100)
@given(st.data())
def test_delete_strands_ignores_removed_strand_noise(data):
    n = data.draw(st.integers(4, 6))
    base = data.draw(braid_words(n=n, max_size=12))
    pos = data.draw(st.integers(0, len(base)))
    k = data.draw(st.integers(1, n - 1))
    noisy = BraidWord(n, base.letters[:pos] + (k, -k) + base.letters[pos:])
    keep = set(data.draw(st.lists(st.integers(1, n), min_size=2, max_size=n, unique=True)))
    assert garside.equal(delete_strands(noisy, keep), delete_strands(base, keep))


def test_parse_and_str():
    w = BraidWord.parse("1 -2 3", 4)
    assert w.letters == (1, -2, 3)
    assert str(w) == "1 -2 3"
    with pytest.raises(ValueError):
        BraidWord.parse("1 a", 4)
