"""Small exact linear algebra over the rationals.

Matrices are lists of lists of Fraction (rows).  Sizes here are desk scale
(tens, occasionally low hundreds), so plain Gaussian elimination is plenty.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(rows: int, cols: int):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def copy(m):
    return [row[:] for row in m]


def transpose(m):
    if not m:
        return []
    return [[m[i][j] for i in range(len(m))] for j in range(len(m[0]))]


def mat_mul(a, b):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            c = arow[t]
            if c:
                brow = b[t]
                for j in range(m):
                    if brow[j]:
                        orow[j] += c * brow[j]
    return out


def mat_vec(m, x):
    return [sum(row[j] * x[j] for j in range(len(x))) for row in m]


def mat_add(a, b):
    return [[a[i][j] + b[i][j] for j in range(len(a[0]))] for i in range(len(a))]


def mat_scale(a, c):
    return [[c * e for e in row] for row in a]


def is_zero(m) -> bool:
    return all(all(e == 0 for e in row) for row in m)


def rref(m):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    a = copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [e * inv for e in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [e - f * g for e, g in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def nullspace(m, cols=None):
    """Basis of the kernel, as column vectors (lists)."""
    if cols is None:
        cols = len(m[0]) if m else 0
    if not m:
        return [[Fraction(1) if i == j else Fraction(0) for i in range(cols)]
                for j in range(cols)]
    r, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            vec[p] = -r[row_idx][f]
        basis.append(vec)
    return basis


def solve(a, b):
    """One solution of a x = b, or None if inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [a[i][:] + [Fraction(b[i])] for i in range(rows)]
    r, pivots = rref(aug) if rows else ([], [])
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for row_idx, p in enumerate(pivots):
        x[p] = r[row_idx][cols]
    return x


def column_space_basis(m):
    """Indices of a maximal independent column subset."""
    if not m or not m[0]:
        return []
    _, pivots = rref(m)
    return pivots


def hstack(blocks):
    """Concatenate matrices with equal row counts side by side."""
    blocks = [b for b in blocks if b and b[0]]
    if not blocks:
        return []
    rows = len(blocks[0])
    return [sum((b[i] for b in blocks), []) for i in range(rows)]


def columns(m):
    return [[row[j] for row in m] for j in range(len(m[0]))] if m and m[0] else []


def from_columns(cols, rows):
    if not cols:
        return [[] for _ in range(rows)]
    return [[col[i] for col in cols] for i in range(rows)]
