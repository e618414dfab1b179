from fractions import Fraction
from itertools import combinations

import pytest

from braidkit import specht
from braidkit.perm import closure
from braidkit.specht import Echelon, RatMatrix, SymSquareVector, act_sym2, sym_product


def pair_character_norm(n):
    """Oracle: W is the permutation module on 2-subsets minus a trivial summand,
    so its character at g is (fixed 2-subsets) - 1.  Returns <chi, chi> over A_n."""
    G = closure(specht.an_generators(n))
    total = 0
    for g in G:
        fixed = sum(1 for i, j in combinations(range(1, n + 1), 2) if {g(i), g(j)} == {i, j})
        total += (fixed - 1) ** 2
    return Fraction(total, len(G))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_dimensions(n):
    dec = specht.decompose(n)
    assert len(specht.span_basis(dec.W, n)) == n * (n - 1) // 2 - 1
    assert len(dec.W2) == n - 1
    assert len(dec.W3) == n * (n - 3) // 2
    assert len(specht.span_basis(dec.W2 + dec.W3, n)) == len(dec.W)
    assert all(v.in_W() for v in dec.W2 + dec.W3)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_commutant_is_two_dimensional(n):
    dec = specht.decompose(n)
    assert specht.commutant_dimension(dec.W, specht.an_generators(n)) == 2
    assert specht.commutant_dimension(dec.W2, specht.an_generators(n)) == 1
    assert specht.commutant_dimension(dec.W3, specht.an_generators(n)) == 1


@pytest.mark.parametrize("n", [5, 6])
def test_commutant_matches_character_oracle(n):
    dec = specht.decompose(n)
    assert pair_character_norm(n) == specht.commutant_dimension(dec.W, specht.an_generators(n))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_equivariant_coefficients(n):
    assert specht.solve_equivariant_coefficients(n) == (1, 1)
    assert specht.verify_identities(n)


def test_phi_is_equivariant():
    n = 5
    dec = specht.decompose(n)
    phi = dec.phi(Fraction(2), Fraction(-3))
    for g in specht.sn_generators(n):
        for v in dec.W[:4]:
            assert phi(act_sym2(g, v)) == act_sym2(g, phi(v))


def test_submodule_invariant():
    n = 6
    gens = specht.sn_generators(n)
    W3 = specht.submodule(specht.w3_generator(n), gens)
    ech = Echelon()
    for v in W3:
        ech.add(specht._sparse(v))
    for g in gens:
        for v in W3:
            assert not ech.residual(specht._sparse(act_sym2(g, v)))


def test_action_matrices_reject_non_invariant_span():
    n = 5
    with pytest.raises(ValueError):
        specht.action_matrices([specht.w3_generator(n)], specht.sn_generators(n))


def test_sym_product_and_vector_ops():
    n = 4
    v = sym_product(specht.e(n, 1), specht.e(n, 2))
    assert {k: x for k, x in v.as_dict().items() if x} == {(1, 2): 1}
    assert (v - v).is_zero()
    assert (2 * v + v) == 3 * v
    assert not SymSquareVector.from_dict(n, {(1, 1): 1}).in_W()


def test_rat_matrix():
    M = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert M.rank() == 2
    assert M.solve([5, 6]) == (Fraction(-4), Fraction(9, 2))
    assert RatMatrix.from_rows([[1, 1], [1, 1]]).solve([1, 2]) is None
    assert (M @ M - M @ M).rank() == 0


def test_echelon_coordinates():
    ech = Echelon(reduced=True)
    assert ech.add({0: Fraction(1), 1: Fraction(1)})
    assert ech.add({1: Fraction(1)})
    assert not ech.add({0: Fraction(2), 1: Fraction(5)})
    assert ech.rank == 2
    assert ech.coordinates({0: Fraction(3)}) is not None
