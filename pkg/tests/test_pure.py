import random
from itertools import combinations

import pytest

from braidkit.braid import BraidWord, band_generator, make_constant
from braidkit.checks import random_pure, random_word
from braidkit.pure import AbelianVector, abelianize_pure, in_Jn_lattice, is_commutator, is_in_Jn, is_pure, linking


def test_linking_examples():
    assert linking(make_constant("tau", 5), 3, 4) == -1
    assert linking(BraidWord(3, (1, 1)), 1, 2) == 1
    assert linking(BraidWord(3, (1, 1)), 1, 3) == 0
    with pytest.raises(ValueError):
        linking(BraidWord(3, (1,)), 1, 2)
    with pytest.raises(ValueError):
        linking(BraidWord(3, (1, 1)), 2, 2)


def test_linking_symmetric():
    a = band_generator(2, 5, 6) ** -4 * band_generator(1, 3, 6) ** 2
    assert linking(a, 5, 2) == linking(a, 2, 5) == -2
    assert linking(a, 1, 3) == 1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_band_squares_are_units(n):
    for i, j in combinations(range(1, n + 1), 2):
        assert abelianize_pure(band_generator(i, j, n) ** 2) == AbelianVector.unit(n, i, j)


def test_c_squared():
    v = abelianize_pure(make_constant("c", 5) ** -2)
    assert str(v) == "A12:1 A34:-1"
    assert v == AbelianVector.from_dict(5, {(1, 2): 1, (3, 4): -1})


def test_abelianize_rejects_non_pure():
    with pytest.raises(ValueError):
        abelianize_pure(BraidWord(3, (1,)))


def test_abelian_vector_ops():
    u = AbelianVector.unit(4, 1, 2)
    v = AbelianVector.unit(4, 3, 4)
    assert {k: a for k, a in (u - v).as_dict().items() if a} == {(1, 2): 1, (3, 4): -1}
    assert (u + v).total() == 2
    assert str(AbelianVector.zero(4)) == "0"
    assert str(AbelianVector.unit(11, 2, 10)) == "A2,10:1"
    with pytest.raises(ValueError):
        u + AbelianVector.unit(5, 1, 2)


def test_abelianization_is_additive():
    rng = random.Random(8)
    for _ in range(100):
        a, b = random_pure(rng, 5, 3), random_pure(rng, 5, 3)
        assert abelianize_pure(a * b) == abelianize_pure(a) + abelianize_pure(b)


def test_total_is_half_exponent_sum():
    rng = random.Random(9)
    for _ in range(100):
        a = random_pure(rng, 6, 4)
        assert 2 * abelianize_pure(a).total() == sum(1 if x > 0 else -1 for x in a.letters)


def test_conjugation_invariance_of_total():
    rng = random.Random(10)
    for _ in range(200):
        a = random_pure(rng, 5, 3)
        x = random_word(rng, 5, 10)
        assert abelianize_pure(x * a * ~x).total() == abelianize_pure(a).total()


def test_predicates():
    for n in (5, 6):
        tau = make_constant("tau", n)
        assert is_pure(tau) and is_commutator(tau) and is_in_Jn(tau)
        assert in_Jn_lattice(abelianize_pure(tau))
    assert not is_in_Jn(BraidWord(3, (1, 1)))
    assert not is_pure(BraidWord(3, (1, -2)))
    assert is_commutator(BraidWord(3, (1, -2)))
