import random
from fractions import Fraction

import pytest

from torictop.errors import InputError
from torictop.intlinalg import (
    integer_kernel_basis,
    inverse_rational,
    is_basis_extendable,
    is_primitive,
    mat_det,
    mat_mul,
    rank_int,
    smith_invariant_factors,
    smith_with_transform,
    solve_unique,
)


def leibniz_det(a):
    # independent determinant for 3x3 and smaller
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))


def reference_invariant_factors(rows):
    """Slow textbook diagonalization on dense lists, used as an oracle."""
    a = [list(r) for r in rows]
    m, n = len(a), len(a[0]) if rows else 0
    factors = []
    t = 0
    while t < min(m, n):
        pos = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pos is None or abs(a[i][j]) < abs(a[pos[0]][pos[1]])):
                    pos = (i, j)
        if pos is None:
            break
        a[t], a[pos[0]] = a[pos[0]], a[t]
        for row in a:
            row[t], row[pos[1]] = row[pos[1]], row[t]
        again = True
        while again:
            again = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        again = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        again = True
        factors.append(abs(a[t][t]))
        t += 1
    # sort into divisibility order
    from math import gcd
    vals = [f for f in factors if f]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                if vals[j] % vals[i]:
                    g = gcd(vals[i], vals[j])
                    vals[i], vals[j] = g, vals[i] * vals[j] // g
                    changed = True
        vals.sort()
    return vals


def to_entries(rows):
    return {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}


def test_det_examples():
    assert mat_det([[1, 0], [0, 1]]) == 1
    assert mat_det([[0, -1], [1, 0]]) == 1
    assert mat_det([[2, 0], [0, 3]]) == 6
    assert mat_det([[1, 2], [2, 4]]) == 0


def test_det_random_vs_leibniz():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 3)
        a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert mat_det(a) == leibniz_det(a)


def test_primitive():
    assert is_primitive((1, 0)) and is_primitive((2, 3)) and is_primitive((0, -1))
    assert not is_primitive((2, 4)) and not is_primitive((0, 0))


def test_solve_unique():
    sol = solve_unique([[1, 1], [1, -1]], [3, 1])
    assert sol == [Fraction(2), Fraction(1)]
    assert solve_unique([[1, 0], [1, 0]], [0, 1]) is None
    with pytest.raises(InputError):
        solve_unique([[1, 0], [2, 0]], [1, 2])  # free column


def test_inverse_rational():
    a = [[1, 2], [3, 5]]
    inv = inverse_rational(a)
    assert mat_mul(a, inv) == [[1, 0], [0, 1]]
    with pytest.raises(InputError):
        inverse_rational([[1, 2], [2, 4]])


def test_smith_known_cases():
    assert smith_invariant_factors({(0, 0): 2}, 1, 1) == [2]
    assert smith_invariant_factors(to_entries([[4, 0], [0, 6]]), 2, 2) == [2, 12]
    assert smith_invariant_factors({}, 3, 3) == []
    assert smith_invariant_factors(to_entries([[1, 0], [0, 1]]), 2, 2) == [1, 1]


def test_smith_random_vs_reference():
    rng = random.Random(99)
    for _ in range(150):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        got = smith_invariant_factors(to_entries(rows), m, n)
        assert got == reference_invariant_factors(rows), rows


def test_smith_with_transform_properties():
    rng = random.Random(5)
    for _ in range(80):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
        d, u, v = smith_with_transform(a)
        assert abs(mat_det(u)) == 1 and abs(mat_det(v)) == 1
        assert mat_mul(u, mat_mul(a, v)) == d
        diag = [d[i][i] for i in range(min(m, n))]
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0
        nz = [x for x in diag if x]
        assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
        assert [abs(x) for x in nz] == reference_invariant_factors(a)


def test_kernel_basis():
    basis = integer_kernel_basis([[1, 1, 1]])
    assert len(basis) == 2
    for vec in basis:
        assert sum(vec) == 0
        assert is_primitive(vec)
    assert integer_kernel_basis([[1, 0], [0, 1]]) == []
    rng = random.Random(11)
    for _ in range(60):
        m, n = rng.randint(1, 3), rng.randint(1, 5)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
        basis = integer_kernel_basis(a)
        assert len(basis) == n - rank_int(a)
        for vec in basis:
            assert all(sum(r[j] * vec[j] for j in range(n)) == 0 for r in a)
            assert is_primitive(vec)


def test_basis_extendable():
    assert is_basis_extendable([(1, 0), (0, 1)])
    assert is_basis_extendable([(1, 1)])
    assert is_basis_extendable([(1, 0, 0), (0, 1, 0)])
    assert not is_basis_extendable([(1, 0), (1, 2)])
    assert not is_basis_extendable([(2, 0)])
    assert is_basis_extendable([])
