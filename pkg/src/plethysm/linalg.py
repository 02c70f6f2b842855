"""Exact integer linear algebra: fraction-free elimination and kernels.

Python integers are unbounded, so Bareiss elimination stays exact without
any overflow handling; the fraction-free update keeps intermediate entries
small compared to naive integer elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def row_echelon(matrix: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Bareiss fraction-free row echelon form.

    Returns (echelon rows, pivot column indices).  The input is not modified.
    """
    m = [row[:] for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i = m[i]
            # Sylvester's identity makes this division exact, also when mic == 0
            for j in range(c, ncols):
                row_i[j] = (row_i[j] * p - mic * row_r[j]) // prev
        prev = p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def integer_rank(matrix: list[list[int]]) -> int:
    if not matrix:
        return 0
    _, pivots = row_echelon(matrix)
    return len(pivots)


def _primitive(vec: list[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        vec = [x // g for x in vec]
    for x in vec:
        if x:
            if x < 0:
                vec = [-y for y in vec]
            break
    return vec


def integer_kernel(matrix: list[list[int]], ncols: int) -> list[list[int]]:
    """Primitive integer basis of the right kernel {x : M x = 0}.

    One basis vector per free column, produced by back substitution over the
    echelon form; denominators are cleared and the content divided out, with
    the first non-zero entry normalized positive.
    """
    if not matrix:
        return [[1 if j == f else 0 for j in range(ncols)] for f in range(ncols)]
    echelon, pivots = row_echelon(matrix)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis: list[list[int]] = []
    for f in free_cols:
        x: list[Fraction] = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = Fraction(0)
            row = echelon[r]
            for j in range(pc + 1, ncols):
                if row[j] and x[j]:
                    s += row[j] * x[j]
            x[pc] = -s / row[pc]
        lcm = 1
        for v in x:
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        vec = [int(v * lcm) for v in x]
        basis.append(_primitive(vec))
    return basis
