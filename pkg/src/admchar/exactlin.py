"""Exact rational linear algebra on tuples of fractions.

Vectors are tuples of Fraction; matrices are tuples of row tuples.  Everything
here is deterministic and exact, which the root-system and lattice layers rely
on (memberships, indices and Weyl phases must never pass through floats).
"""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence

Vector = tuple[Q, ...]
Matrix = tuple[tuple[Q, ...], ...]


def vec(entries: Iterable) -> Vector:
    return tuple(Q(e) for e in entries)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(tuple(Q(e) for e in row) for row in rows)


def zero_vec(n: int) -> Vector:
    return (Q(0),) * n


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vec_scale(c, x: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in x)


def dot(x: Vector, y: Vector) -> Q:
    if len(x) != len(y):
        raise ValueError("dimension mismatch: %d vs %d" % (len(x), len(y)))
    return sum((a * b for a, b in zip(x, y)), Q(0))


def identity(n: int) -> Matrix:
    return tuple(tuple(Q(1) if i == j else Q(0) for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_vec(a: Matrix, x: Vector) -> Vector:
    return tuple(dot(row, x) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def columns(a: Matrix) -> tuple[Vector, ...]:
    return transpose(a)


def from_columns(cols: Sequence[Vector]) -> Matrix:
    return transpose(tuple(cols))


def det(a: Matrix) -> Q:
    """Determinant by fraction-free-ish Gaussian elimination."""
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    result = Q(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Q(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / p
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return sign * result


def solve(a: Matrix, b: Vector) -> Vector | None:
    """Solve a x = b exactly for rectangular a; None if inconsistent.

    When the system is underdetermined the free variables are set to 0, which
    never happens for the lattice bases used here (full column rank).
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    m = [list(row) + [b[i]] for i, row in enumerate(a)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        p = m[row][col]
        m[row] = [e / p for e in m[row]]
        for r in range(nrows):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [e - f * pe for e, pe in zip(m[r], m[row])]
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    # Consistency: a leftover zero row must have zero right-hand side.
    for r in range(row, nrows):
        if all(m[r][c] == 0 for c in range(ncols)) and m[r][ncols] != 0:
            return None
    x = [Q(0)] * ncols
    for r, c in pivots:
        x[c] = m[r][ncols]
    return tuple(x)


def invert(a: Matrix) -> Matrix:
    n = len(a)
    cols = []
    for j in range(n):
        e = tuple(Q(1) if i == j else Q(0) for i in range(n))
        x = solve(a, e)
        if x is None:
            raise ValueError("matrix not invertible")
        cols.append(x)
    return from_columns(cols)


def is_integral(x: Iterable[Q]) -> bool:
    return all(e.denominator == 1 for e in x)


def smith_normal_form(m_int: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form over the integers: returns (u, d, v) with u m v = d.

    u and v are unimodular; d is diagonal with d[i][i] dividing d[i+1][i+1].
    Textbook algorithm; fine for the tiny matrices (rank <= 6) used here.
    """
    a = [[int(e) for e in row] for row in m_int]
    n = len(a)
    k = len(a[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(k)] for i in range(k)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(n, k):
        # Find a nonzero pivot of least magnitude in the trailing block.
        best = None
        for i in range(t, n):
            for j in range(t, k):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = False
        for i in range(t + 1, n):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                add_row(t, i, -q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, k):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                add_col(t, j, -q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # Enforce divisibility of the remaining block by the pivot.
        offender = None
        for i in range(t + 1, n):
            for j in range(t + 1, k):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v
