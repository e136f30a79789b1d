from fractions import Fraction

from gmpi.linalg import matmul, rank, row_echelon, solve

F = Fraction


def rows(*data):
    return [[F(x) for x in row] for row in data]


def test_rank_examples():
    assert rank([]) == 0
    assert rank(rows((0, 0), (0, 0))) == 0
    assert rank(rows((1, 0), (0, 1))) == 2
    assert rank(rows((1, 2), (2, 4))) == 1
    assert rank(rows((1, 2, 3), (4, 5, 6))) == 2
    assert rank(rows((1,), (2,), (3,))) == 1


def test_row_echelon_pivots():
    m = rows((0, 1, 2), (1, 0, 1))
    assert row_echelon(m) == [0, 1]


def test_solve_unique():
    a = rows((2, 0), (0, 4))
    assert solve(a, [F(6), F(8)]) == [F(3), F(2)]


def test_solve_inconsistent_returns_none():
    a = rows((1, 1), (1, 1))
    assert solve(a, [F(1), F(2)]) is None


def test_solve_underdetermined_zeroes_free_variables():
    # the fixed-pivot rule: free variables are set to zero, deterministically
    a = rows((1, 1),)
    assert solve(a, [F(2)]) == [F(2), F(0)]
    a = rows((0, 1, 1),)
    assert solve(a, [F(5)]) == [F(0), F(5), F(0)]


def test_solve_degenerate_shapes():
    assert solve([], []) == []
    assert solve([[]], [F(0)]) == []
    assert solve([[]], [F(1)]) is None


def test_matmul():
    a = rows((1, 2), (3, 4))
    b = rows((0, 1), (1, 0))
    assert matmul(a, b) == rows((2, 1), (4, 3))
    assert matmul([], b) == []
