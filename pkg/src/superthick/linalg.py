"""Dense exact linear algebra over Fraction for the small coboundary blocks."""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def rref(mat: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns, computed exactly."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat: Matrix) -> int:
    if not mat or not mat[0]:
        return 0
    return len(rref(mat)[1])


def kernel_basis(mat: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of the null space of ``mat`` (ncols unknowns)."""
    if not mat:
        basis = []
        for j in range(ncols):
            v = [Fraction(0)] * ncols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    red, pivots = rref(mat)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for j in free:
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][j]
        basis.append(v)
    return basis


def solve(mat: Matrix, rhs: list[Fraction]) -> list[Fraction] | None:
    """One exact solution of mat*x = rhs, or None when inconsistent."""
    rows = len(mat)
    if rows == 0:
        return [] if all(b == 0 for b in rhs) else None
    ncols = len(mat[0])
    aug = [mat[i][:] + [rhs[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x
