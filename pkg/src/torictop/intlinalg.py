"""Exact integer and rational linear algebra kernels.

Everything works over Python's arbitrary precision integers or
``fractions.Fraction``; no floating point enters any computation.  The
sparse Smith normal form routine is the workhorse behind integral
homology, lattice kernels and nonsingularity tests, so it favours small
pivots and low fill-in.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InputError


def gcd_vector(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def is_primitive(v) -> bool:
    """A nonzero integer vector whose coordinates have gcd one."""
    return gcd_vector(v) == 1


def mat_det(rows) -> int:
    """Determinant of a square integer matrix, by fraction-free Bareiss
    elimination (all intermediate values stay integral)."""
    a = [[int(x) for x in row] for row in rows]
    n = len(a)
    if any(len(row) != n for row in a):
        raise InputError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_unique(rows, rhs):
    """Solve ``A x = b`` exactly over the rationals.

    Returns the unique solution as a list of Fractions, or None when the
    system is inconsistent.  Raises InputError when the solution exists
    but is not unique (the callers all guarantee full column rank).
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    if len(pivots) < n:
        raise InputError("linear system is underdetermined")
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = aug[i][n]
    return sol


def inverse_rational(rows):
    """Exact inverse of a square matrix, as rows of Fractions."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise InputError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def mat_mul(a, b):
    """Product of two matrices given as lists of rows."""
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _row_axpy(rows, cols, dst, src, k):
    # row[dst] += k * row[src]
    rdst = rows[dst]
    for c, v in rows[src].items():
        new = rdst.get(c, 0) + k * v
        if new:
            rdst[c] = new
            cols[c].add(dst)
        elif c in rdst:
            del rdst[c]
            cols[c].discard(dst)


def _col_axpy(rows, cols, dst, src, k):
    # col[dst] += k * col[src]
    for r in list(cols[src]):
        v = rows[r][src]
        new = rows[r].get(dst, 0) + k * v
        if new:
            rows[r][dst] = new
            cols[dst].add(r)
        elif dst in rows[r]:
            del rows[r][dst]
            cols[dst].discard(r)


def _normalize_invariant_factors(diag):
    """Sort a diagonal into divisibility order d1 | d2 | ... by repeated
    gcd/lcm exchanges.  Only entries > 1 matter; 1 divides everything."""
    ones = sum(1 for d in diag if abs(d) == 1)
    rest = sorted(abs(d) for d in diag if abs(d) > 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                a, b = rest[i], rest[j]
                if b % a:
                    g = gcd(a, b)
                    rest[i], rest[j] = g, a * b // g
                    changed = True
        if changed:
            rest.sort()
    return [1] * ones + rest


def smith_invariant_factors(entries, nrows, ncols):
    """Invariant factors of an integer matrix given sparsely.

    ``entries`` maps (row, col) to a nonzero value.  The matrix is
    diagonalised by unimodular row and column operations; pivots are
    chosen from the shortest remaining row, preferring units, which keeps
    fill-in low on the incidence-type matrices this package produces.
    The collected diagonal is normalised into divisibility order at the
    end (a diagonal matrix is unimodularly equivalent to its normalised
    form), so the result is the true list d1 | d2 | ... of factors.
    """
    rows: dict = {}
    cols: dict = {}
    for (r, c), v in entries.items():
        if v:
            rows.setdefault(r, {})[c] = v
            cols.setdefault(c, set()).add(r)
    diag = []
    while rows:
        for rr in [rr for rr, row in rows.items() if not row]:
            del rows[rr]
        if not rows:
            break
        # pivot from the shortest row; prefer a unit in a short column
        r = min(rows, key=lambda rr: (len(rows[rr]), rr))
        row = rows[r]
        c = min(row, key=lambda cc: (abs(row[cc]) != 1, len(cols[cc]), cc))
        if abs(row[c]) != 1:
            # no unit in this row: global scan for the smallest entry
            best = None
            for r2, row2 in rows.items():
                for c2, v2 in row2.items():
                    key = (abs(v2), len(row2) + len(cols[c2]), r2, c2)
                    if best is None or key < best:
                        best = key
                        r, c = r2, c2
                    if key[0] == 1:
                        break
                else:
                    continue
                break
        p = rows[r][c]
        while True:
            moved = False
            for r2 in list(cols[c]):
                if r2 == r:
                    continue
                v = rows[r2][c]
                q = v // p
                if q:
                    _row_axpy(rows, cols, r2, r, -q)
                rem = rows[r2].get(c, 0)
                if rem:
                    # remainder is strictly smaller than |p|: adopt it
                    r, p = r2, rem
                    moved = True
                    break
            if moved:
                continue
            for c2 in list(rows[r]):
                if c2 == c:
                    continue
                v = rows[r][c2]
                q = v // p
                if q:
                    _col_axpy(rows, cols, c2, c, -q)
                rem = rows[r].get(c2, 0)
                if rem:
                    c, p = c2, rem
                    moved = True
                    break
            if not moved:
                break
        # row r and column c now hold only the pivot: detach the block
        del rows[r]
        del cols[c]
        diag.append(abs(p))
    return _normalize_invariant_factors(diag)


def rank_int(rows) -> int:
    """Rank over Q (equivalently over Z) of a dense integer matrix."""
    entries = {}
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                entries[(i, j)] = v
    ncols = len(rows[0]) if rows else 0
    return len(smith_invariant_factors(entries, len(rows), ncols))


def rank_sparse(entries, nrows, ncols) -> int:
    return len(smith_invariant_factors(entries, nrows, ncols))


def smith_with_transform(rows):
    """Dense Smith normal form with transforms, for small matrices.

    Returns (D, U, V) with D = U A V, where U and V are unimodular and D
    is diagonal with invariant factors in divisibility order.
    """
    a = [[int(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def col_op(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while True:
        # find any nonzero entry at or beyond (t, t)
        pos = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j]:
                    if pos is None or abs(a[i][j]) < abs(a[pos[0]][pos[1]]):
                        pos = (i, j)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            moved = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        moved = True
                        break
            if not moved:
                break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
        if t == min(m, n):
            break
    # enforce divisibility along the diagonal
    changed = True
    while changed:
        changed = False
        for i in range(min(m, n) - 1):
            d1, d2 = a[i][i], a[i + 1][i + 1]
            if d1 and d2 and d2 % d1:
                # standard 2x2 repair: gcd moves forward, lcm backward
                col_op(i, i + 1, 1)
                while True:
                    if a[i + 1][i]:
                        q = a[i + 1][i] // a[i][i]
                        row_op(i + 1, i, -q)
                        if a[i + 1][i]:
                            swap_rows(i, i + 1)
                            continue
                    if a[i][i + 1]:
                        q = a[i][i + 1] // a[i][i]
                        col_op(i + 1, i, -q)
                        if a[i][i + 1]:
                            swap_cols(i, i + 1)
                            continue
                    break
                if a[i][i] < 0:
                    a[i] = [-x for x in a[i]]
                    u[i] = [-x for x in u[i]]
                if a[i + 1][i + 1] < 0:
                    a[i + 1] = [-x for x in a[i + 1]]
                    u[i + 1] = [-x for x in u[i + 1]]
                changed = True
    return a, u, v


def integer_kernel_basis(rows):
    """Basis of the integer kernel {x : A x = 0}, as primitive vectors.

    Computed from the column transform of the Smith normal form; each
    basis vector is a column of a unimodular matrix, hence primitive.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    d, _u, v = smith_with_transform(rows)
    rank = sum(1 for i in range(min(m, n)) if d[i][i])
    basis = []
    for j in range(rank, n):
        vec = [v[i][j] for i in range(n)]
        lead = next((x for x in vec if x), 0)
        if lead < 0:
            vec = [-x for x in vec]
        basis.append(tuple(vec))
    return basis


def is_basis_extendable(columns) -> bool:
    """Whether the given integer column vectors extend to a Z-basis,
    i.e. every invariant factor of the matrix equals one."""
    if not columns:
        return True
    n = len(columns[0])
    rows = [[col[i] for col in columns] for i in range(n)]
    factors = smith_invariant_factors(
        {(i, j): rows[i][j] for i in range(len(rows)) for j in range(len(columns))
         if rows[i][j]},
        len(rows), len(columns))
    return len(factors) == len(columns) and all(f == 1 for f in factors)
