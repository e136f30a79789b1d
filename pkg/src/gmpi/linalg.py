"""Dense exact linear algebra over the rationals (small matrices only).

Matrices are lists of rows of Fractions.  The reduction uses a fixed pivot
rule (first nonzero entry scanning columns left to right, rows top down) so
that underdetermined solves return one deterministic solution.
"""

from __future__ import annotations

from fractions import Fraction


def row_echelon(rows: list[list[Fraction]]):
    """In-place forward elimination; returns the list of pivot columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows) -> int:
    work = [list(r) for r in rows]
    return len(row_echelon(work))


def solve(a_rows, b: list[Fraction]):
    """One solution x of A x = b, or None if inconsistent.

    Free variables are set to zero (the fixed-pivot reduced echelon solve).
    """
    m = len(a_rows)
    if m == 0:
        return [] if all(v == 0 for v in b) else None
    n = len(a_rows[0])
    if n == 0:
        return [] if all(v == 0 for v in b) else None
    aug = [list(row) + [b[i]] for i, row in enumerate(a_rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
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
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def matmul(a_rows, b_rows):
    """Plain dense product (small matrices)."""
    if not a_rows:
        return []
    inner = len(a_rows[0])
    assert inner == len(b_rows)
    ncols = len(b_rows[0]) if b_rows else 0
    out = []
    for row in a_rows:
        acc = [Fraction(0)] * ncols
        for k, f in enumerate(row):
            if f:
                brow = b_rows[k]
                for j in range(ncols):
                    if brow[j]:
                        acc[j] += f * brow[j]
        out.append(acc)
    return out
