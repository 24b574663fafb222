import random
from fractions import Fraction

from assoc2 import Polynomial, RationalFunction
from assoc2.linalg import (
    determinant,
    identity_matrix,
    inverse,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    solve,
)
from util import random_rf


def test_rank_and_kernel_rational():
    rows = [[Fraction(1), Fraction(2), Fraction(3)],
            [Fraction(2), Fraction(4), Fraction(6)],
            [Fraction(0), Fraction(1), Fraction(1)]]
    assert rank(rows) == 2
    basis = kernel_basis(rows, 3)
    assert len(basis) == 1
    for row in rows:
        assert sum(r * x for r, x in zip(row, basis[0])) == 0


def test_solve_consistent_and_inconsistent():
    rows = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(-1)]]
    sol = solve(rows, [Fraction(3), Fraction(1)])
    assert sol == [Fraction(2), Fraction(1)]
    rows = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    assert solve(rows, [Fraction(1), Fraction(3)]) is None


def test_inverse_roundtrip():
    rng = random.Random(9)
    for _ in range(30):
        m = [[Fraction(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)]
        inv = inverse(m)
        if inv is None:
            assert determinant(m) == 0
            continue
        assert mat_mul(m, inv) == identity_matrix(3)


def test_rational_function_field():
    t = RationalFunction.t()
    one = RationalFunction.const(1)
    zero = RationalFunction(Polynomial())
    m = [[one, t], [t, one]]
    assert determinant(m, zero) == one - t * t
    inv = inverse(m, zero, one)
    assert mat_mul(m, inv) == identity_matrix(2, zero, one)
    rng = random.Random(10)
    rows = [[random_rf(rng) for _ in range(3)] for _ in range(2)]
    basis = kernel_basis(rows, 3, zero, one)
    for vec in basis:
        assert all(not x for x in mat_vec(rows, vec))
    assert rank(rows) + len(basis) == 3
