import itertools
import random
from math import gcd

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from errors import ShapeMismatchError
from integer_matrix import IntegerMatrix
from smith_form import (invariant_factors, matrix_rank, smith_normal_form,
                        solve_integer_system)


def random_matrix(rng, rows, cols, density=0.6, bound=4):
    return IntegerMatrix.from_dense([
        [rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)])


def determinant(matrix):
    return Matrix(matrix.to_dense()).det()


def test_zero_and_empty_matrices():
    assert smith_normal_form(IntegerMatrix.zeros(3, 2)).invariant_factors == ()
    assert smith_normal_form(IntegerMatrix.zeros(0, 4)).rank == 0
    assert smith_normal_form(IntegerMatrix.zeros(4, 0), transforms=True).rank == 0


def test_diagonal_two_three():
    snf = smith_normal_form(IntegerMatrix.from_dense([[2, 0], [0, 3]]))
    assert snf.invariant_factors == (1, 6)
    assert snf.rank == 2
    assert snf.torsion == (6,)


def test_known_factors():
    m = IntegerMatrix.from_dense([[12, 6, 4], [3, 9, 6], [2, 16, 14]])
    assert invariant_factors(m) == (1, 10, 30)
    assert matrix_rank(IntegerMatrix.from_dense([[2, 4], [1, 2]])) == 1
    assert invariant_factors(IntegerMatrix.from_dense([[2, 4], [6, 8]])) == (2, 4)


def test_transforms_diagonalize_random_matrices():
    rng = random.Random(3)
    for _ in range(40):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        snf = smith_normal_form(m, transforms=True)
        factors = snf.invariant_factors
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert all(d > 0 for d in factors)
        U, V = snf.row_transform, snf.col_transform
        assert U @ m @ V == snf.diagonal()
        assert U @ snf.row_inverse == IntegerMatrix.identity(m.rows)
        assert V @ snf.col_inverse == IntegerMatrix.identity(m.cols)
        assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
        assert smith_normal_form(m).invariant_factors == factors


def determinantal_factors(matrix):
    """d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors."""
    dense = Matrix(matrix.to_dense())
    divisors = [1]
    for k in range(1, min(matrix.shape) + 1):
        g = 0
        for rows in itertools.combinations(range(matrix.rows), k):
            for cols in itertools.combinations(range(matrix.cols), k):
                g = gcd(g, int(dense.extract(list(rows), list(cols)).det()))
        if g == 0:
            break
        divisors.append(g)
    return tuple(b // a for a, b in zip(divisors, divisors[1:]))


def test_agrees_with_determinantal_divisors():
    rng = random.Random(17)
    for _ in range(30):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5), bound=9)
        assert smith_normal_form(m).invariant_factors == determinantal_factors(m)


def test_agrees_with_sympy():
    m = IntegerMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    expected = tuple(abs(int(f)) for f in
                     sympy_invariant_factors(Matrix(m.to_dense()), domain=ZZ) if f != 0)
    assert smith_normal_form(m).invariant_factors == expected == (2, 6, 12)


def test_divisibility_fix_for_incomparable_pivots():
    m = IntegerMatrix.from_dense([[4, 0, 0], [0, 6, 0], [0, 0, 10]])
    snf = smith_normal_form(m, transforms=True)
    assert snf.invariant_factors == (2, 2, 60)
    assert snf.row_transform @ m @ snf.col_transform == snf.diagonal()


def test_solve_integer_system():
    a = IntegerMatrix.from_dense([[2, 1], [1, 1]])
    x = solve_integer_system(a, [3, 2])
    assert a.apply(dict(enumerate(x))) == {0: 3, 1: 2}
    assert solve_integer_system(IntegerMatrix.from_dense([[2]]), [1]) is None
    inconsistent = IntegerMatrix.from_dense([[1, 1], [1, 1]])
    assert solve_integer_system(inconsistent, [1, 2]) is None
    wide = IntegerMatrix.from_dense([[6, 10, 15]])
    y = solve_integer_system(wide, [1])
    assert 6 * y[0] + 10 * y[1] + 15 * y[2] == 1
    with pytest.raises(ShapeMismatchError):
        solve_integer_system(a, [1])
