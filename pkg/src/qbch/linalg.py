"""Gaussian elimination over a GF.  Matrices are lists of lists of integer codes.

Pivots are always chosen as the first nonzero entry scanning rows top-down in
the leftmost remaining column, so every result is deterministic.
"""

from __future__ import annotations

from .errors import DimensionMismatch, DivisionByZero
from .field import GF


def rref(field: GF, rows, ncols: int | None = None):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    a = [list(r) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    mul, sub, inv = field.mul, field.sub, field.inv
    for c in range(ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        s = inv(a[r][c])
        if s != 1:
            a[r] = [mul(s, x) for x in a[r]]
        prow = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [sub(x, mul(f, y)) for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(field: GF, rows) -> int:
    return len(rref(field, rows)[1]) if rows else 0


def nullspace(field: GF, rows, ncols: int):
    """Basis of {x : A x = 0}, one vector per free column, in column order."""
    red, pivots = rref(field, rows, ncols) if rows else ([], [])
    pivset = set(pivots)
    basis = []
    for fcol in range(ncols):
        if fcol in pivset:
            continue
        v = [0] * ncols
        v[fcol] = 1
        for row, pc in zip(red, pivots):
            if row[fcol]:
                v[pc] = field.neg(row[fcol])
        basis.append(v)
    return basis


def solve(field: GF, rows, rhs, ncols: int):
    """Solve A x = b.  Returns (particular solution, nullspace basis) or None."""
    if len(rows) != len(rhs):
        raise DimensionMismatch("row count differs from right-hand side length")
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(field, aug, ncols + 1) if aug else ([], [])
    if pivots and pivots[-1] == ncols:
        return None
    x = [0] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x, nullspace(field, [r[:ncols] for r in red], ncols)


def matmul(field: GF, a, b):
    mul, add = field.mul, field.add
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add(acc, mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def matvec(field: GF, a, v):
    mul, add = field.mul, field.add
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = add(acc, mul(x, y))
        out.append(acc)
    return out


def determinant(field: GF, rows) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = field.neg(det)
        det = field.mul(det, a[c][c])
        s = field.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c]:
                f = field.mul(a[i][c], s)
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[c])]
    return det


def inverse(field: GF, rows):
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(field, aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise DivisionByZero("matrix is singular")
    return [r[n:] for r in red]
