"""Tests for polynomials, exact rank computation, and inclusion matrices."""

import random
from fractions import Fraction
from math import comb

import pytest

from hypersimplex.exact_linalg import (IntPolynomial, RationalMatrix,
                                       binomial, poly_substitute_x_minus_1,
                                       rank_exact, rank_mod_p,
                                       set_inclusion_matrix,
                                       sparse_rank_exact, sparse_rank_mod_p)


@pytest.mark.parametrize("n,k,expected", [
    (4, 2, 6),
    (10, 0, 1),
    (9, 4, 126),
    (5, -1, 0),
    (5, 6, 0),
])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_pascal_recurrence():
    for n in range(1, 12):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestIntPolynomial:
    def test_normalization_strips_trailing_zeros(self):
        assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPolynomial((0, 0)).coeffs == ()
        assert IntPolynomial((0, 0)).degree == -1

    def test_arithmetic(self):
        p = IntPolynomial((1, 1))       # 1 + x
        q = IntPolynomial((-1, 1))      # x - 1
        assert (p * q).coeffs == (-1, 0, 1)
        assert (p + q).coeffs == (0, 2)
        assert (p - p).coeffs == ()
        assert (3 * p).coeffs == (3, 3)
        assert (q ** 2).coeffs == (1, -2, 1)

    def test_evaluate(self):
        p = IntPolynomial((1, 0, 1))
        assert p(3) == 10
        assert p(Fraction(1, 2)) == Fraction(5, 4)


@pytest.mark.parametrize("coeffs,expected", [
    ((0, 0, 1), (1, -2, 1)),            # x^2 -> (x-1)^2
    ((1,), (1,)),                       # constants are fixed
    ((0, 3, 0, 1), (-4, 6, -3, 1)),     # x^3 + 3x -> x^3 - 3x^2 + 6x - 4
])
def test_substitute_x_minus_1(coeffs, expected):
    assert poly_substitute_x_minus_1(IntPolynomial(coeffs)).coeffs == expected


def test_substitute_distributes_over_ring_ops():
    rng = random.Random(7)
    for _ in range(25):
        p = IntPolynomial([rng.randint(-4, 4) for _ in range(rng.randint(0, 5))])
        q = IntPolynomial([rng.randint(-4, 4) for _ in range(rng.randint(0, 5))])
        assert poly_substitute_x_minus_1(p + q) == \
            poly_substitute_x_minus_1(p) + poly_substitute_x_minus_1(q)
        assert poly_substitute_x_minus_1(p * q) == \
            poly_substitute_x_minus_1(p) * poly_substitute_x_minus_1(q)


def test_rank_exact_basics():
    assert rank_exact(RationalMatrix.identity(2)) == 2
    assert rank_exact(RationalMatrix.zero(3, 4)) == 0
    m = RationalMatrix.from_rows([[1, 2], [2, 4], [0, 1]])
    assert rank_exact(m) == 2


def test_rank_exact_with_fractions():
    m = RationalMatrix.from_rows([
        [Fraction(1, 2), Fraction(1, 3)],
        [Fraction(3, 2), 1],
        [1, Fraction(2, 3)],
    ])
    assert rank_exact(m) == 1


def test_rank_mod_p_basics():
    assert rank_mod_p(RationalMatrix.identity(2), 10007) == 2
    assert rank_mod_p(RationalMatrix.zero(2, 2), 10007) == 0
    # rank drops mod 2 but not mod 10007
    m = RationalMatrix.from_rows([[2, 0], [0, 1]])
    assert rank_mod_p(m, 2) == 1
    assert rank_mod_p(m, 10007) == 2


def test_rank_mod_p_rejects_bad_denominator():
    m = RationalMatrix.from_rows([[Fraction(1, 10007)]])
    with pytest.raises(ValueError):
        rank_mod_p(m, 10007)


def test_rank_invariant_under_permutations():
    rng = random.Random(11)
    for _ in range(10):
        rows, cols = rng.randint(2, 6), rng.randint(2, 6)
        m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        base = rank_exact(RationalMatrix.from_rows(m))
        perm_rows = m[:]
        rng.shuffle(perm_rows)
        order = list(range(cols))
        rng.shuffle(order)
        perm_both = [[row[j] for j in order] for row in perm_rows]
        assert rank_exact(RationalMatrix.from_rows(perm_both)) == base


def test_matvec():
    m = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert m.matvec([1, 1]) == [3, 7]
    with pytest.raises(ValueError):
        m.matvec([1, 2, 3])


def test_sparse_ranks_agree_with_dense():
    rng = random.Random(3)
    for _ in range(20):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        dense = [[rng.choice([-1, 0, 0, 1, 2]) for _ in range(cols)]
                 for _ in range(rows)]
        sparse = [{j: v for j, v in enumerate(row) if v} for row in dense]
        expected = rank_exact(RationalMatrix.from_rows(dense))
        assert sparse_rank_exact(sparse) == expected
        assert sparse_rank_mod_p(sparse, 10007) == expected


def test_set_inclusion_matrix_shapes_and_values():
    w = set_inclusion_matrix(0, 2, 4)
    assert (w.rows, w.cols) == (1, 6)
    assert all(w[0, j] == 1 for j in range(6))

    w = set_inclusion_matrix(1, 2, 4)
    assert (w.rows, w.cols) == (4, 6)
    assert rank_exact(w) == 4
    # row {1} contains the columns {1,2},{1,3},{1,4} in lex positions 0,1,2
    assert w.entries[0] == [1, 1, 1, 0, 0, 0]


def test_set_inclusion_rank_2_3_8():
    assert rank_exact(set_inclusion_matrix(2, 3, 8)) == comb(8, 2)


def test_set_inclusion_rank_sweep():
    # full rank C(n, i) whenever i <= j and i + j <= n
    for n in range(2, 9):
        for i in range(n + 1):
            for j in range(i, n - i + 1):
                w = set_inclusion_matrix(i, j, n)
                assert rank_exact(w) == comb(n, i), (i, j, n)


def test_set_inclusion_rejects_out_of_range():
    with pytest.raises(ValueError):
        set_inclusion_matrix(1, 5, 4)
