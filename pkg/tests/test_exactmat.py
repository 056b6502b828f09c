import random
from fractions import Fraction

import pytest

from swsurgery.exactmat import (
    SingularMatrixError,
    bareiss_det,
    hnf_row_basis,
    kernel_rows,
    matmul,
    rational_inverse,
    solve_exact,
    solve_mod2,
    symmetric_diagonalize,
    transpose,
)

from .oracles import random_unimodular


def test_bareiss_small_cases():
    assert bareiss_det(((2,),)) == 2
    assert bareiss_det(((1, 2), (3, 4))) == -2
    assert bareiss_det(((0, 1), (1, 0))) == -1
    assert bareiss_det(((1, 1), (1, 1))) == 0
    assert bareiss_det(()) == 1


def test_bareiss_multiplicative_random():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(1, 4)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        u = random_unimodular(rng, n)
        assert bareiss_det(matmul(u, a)) == bareiss_det(u) * bareiss_det(a)
        assert bareiss_det(u) in (1, -1)


def test_rational_inverse_and_solve():
    m = ((2, 1), (1, 1))
    inv = rational_inverse(m)
    assert matmul(m, inv) == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    assert solve_exact(m, (3, 2)) == (Fraction(1), Fraction(1))
    with pytest.raises(SingularMatrixError):
        rational_inverse(((1, 1), (1, 1)))


def test_kernel_rows_saturated():
    # kernel of (2, 4) is generated by the primitive vector (2, -1)
    rows = kernel_rows(((2, 4),))
    assert len(rows) == 1
    assert sorted(map(abs, rows[0])) == [1, 2]
    a = ((1, 1, 1), (0, 1, 2))
    rows = kernel_rows(a)
    assert len(rows) == 1
    x = rows[0]
    assert all(sum(r[i] * x[i] for i in range(3)) == 0 for r in a)
    assert max(map(abs, x)) == 2  # (1, -2, 1) up to sign


def test_kernel_full_and_empty():
    assert kernel_rows(((1, 0), (0, 1))) == ()
    rows = kernel_rows(((0, 0),))
    assert len(rows) == 2


def test_hnf_row_basis_canonical():
    basis = hnf_row_basis(((2, 4), (0, 6), (2, 10)))
    assert basis == ((2, 4), (0, 6))
    # order of generators does not change the canonical basis
    assert hnf_row_basis(((2, 10), (2, 4), (0, 6))) == basis


def test_symmetric_diagonalize_congruence():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 5)
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                g[i][j] = g[j][i] = rng.randint(-5, 5)
        diag, p = symmetric_diagonalize(g)
        check = matmul(matmul(p, g), transpose(p))
        for i in range(n):
            for j in range(n):
                assert check[i][j] == (diag[i] if i == j else 0)


def test_symmetric_diagonalize_radical():
    diag, p = symmetric_diagonalize(((0, 0), (0, 1)))
    zero_positions = [i for i, d in enumerate(diag) if d == 0]
    assert len(zero_positions) == 1
    radical = p[zero_positions[0]]
    assert any(radical)
    assert all(sum(radical[k] * ((0, 0), (0, 1))[k][j] for k in range(2)) == 0 for j in range(2))


def test_solve_mod2():
    g = ((1, 0), (0, 1))
    assert solve_mod2(g, (1, 0)) == (1, 0)
    g2 = ((2, 1), (1, 2))
    x = solve_mod2(g2, (1, 1))
    assert x is not None
    assert all((sum(g2[i][j] * x[j] for j in range(2)) - (1, 1)[i]) % 2 == 0 for i in range(2))
    assert solve_mod2(((2, 0), (0, 2)), (1, 0)) is None
