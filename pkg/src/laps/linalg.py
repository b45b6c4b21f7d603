"""Exact rational Gaussian elimination: nullspace and linear solve.

Deterministic pivoting (first nonzero entry per column, rows in order), all
arithmetic over fractions.Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Row = List[Fraction]


def _rref(rows: List[Row], ncols: int) -> Tuple[List[Row], List[int]]:
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for k in range(r, len(mat)):
            if mat[k][c] != 0:
                pivot = k
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                factor = mat[k][c]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def kernel_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Tuple[Fraction, ...]]:
    """Basis of the right kernel of the matrix, one vector per free column.

    Each basis vector has a 1 in its free coordinate; ordering follows the
    column order, so the result is deterministic.
    """
    for row in rows:
        if len(row) != ncols:
            raise ValueError("row length %d does not match ncols %d" % (len(row), ncols))
    mat, pivots = _rref([[Fraction(x) for x in row] for row in rows], ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(tuple(vec))
    return basis


def solve_unique(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Solve A x = b when the solution exists and is unique, else ValueError."""
    m = len(rows)
    if len(rhs) != m:
        raise ValueError("rhs length %d does not match row count %d" % (len(rhs), m))
    if m == 0:
        return ()
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    mat, pivots = _rref(aug, ncols)
    if len(pivots) < ncols:
        raise ValueError("system is underdetermined")
    for r in range(len(pivots), m):
        if mat[r][ncols] != 0:
            raise ValueError("system is inconsistent")
    sol = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = mat[r][ncols]
    return tuple(sol)
