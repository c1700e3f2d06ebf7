"""Exact integer linear algebra: rank, nullspaces and matrix helpers.

Everything works on plain lists/tuples of Python ints.  Ranks are computed
by fraction-free Gaussian elimination; nullspace bases are returned as
integer vectors (denominators cleared), so downstream representation maps
stay integral.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

IntMatrix = list[list[int]]


def _reduce_row(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


def int_rank(rows: IntMatrix) -> int:
    """Rank over the rationals of an integer matrix (fraction-free elimination)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        a = prow[col]
        for i in range(rank + 1, len(m)):
            b = m[i][col]
            if b:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                row = m[i]
                m[i] = _reduce_row([fa * x - fb * y for x, y in zip(row, prow)])
        rank += 1
        if rank == len(m):
            break
    return rank


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Row-reduce in place; return (matrix, pivot column indices)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def int_nullspace(rows: IntMatrix, ncols: int) -> list[list[int]]:
    """Integer basis of {x : rows @ x = 0} inside Q^ncols.

    The basis vectors are the standard free-column vectors of the reduced
    system, scaled to be integral and primitive.
    """
    work = [[Fraction(x) for x in r] for r in rows if any(r)]
    work, pivots = _rref(work)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[list[int]] = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ivec = [int(x * denom) for x in vec]
        basis.append(_reduce_row(ivec))
    return basis


def int_left_nullspace(rows: IntMatrix) -> list[list[int]]:
    """Integer basis of the left nullspace {y : y @ rows = 0}."""
    if not rows:
        return []
    nrows = len(rows)
    transpose = [[rows[i][j] for i in range(nrows)] for j in range(len(rows[0]))]
    return int_nullspace(transpose, nrows)


def mat_mul(a: tuple[tuple[int, ...], ...], b: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Product of two integer matrices stored as tuples of rows."""
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)

def mat_apply(a: tuple[tuple[int, ...], ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Apply an integer matrix to a column vector."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def identity_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
