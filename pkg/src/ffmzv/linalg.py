"""Dense linear algebra over F_q.

Matrices are lists of lists of field-element ints.  Everything here is
plain Gaussian elimination; the matrices this library produces are small
(a few hundred rows at most), so there is no attempt at anything fancier.
"""
from __future__ import annotations

from .fields import FieldSpec


def rref(field: FieldSpec, rows):
    """Reduced row echelon form.  Returns (rref_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.inv(m[r][c])
        if inv != 1:
            row = field._mul[inv]
            m[r] = [row[x] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                frow = field._mul[f]
                sub = field.sub
                mi, mr = m[i], m[r]
                for j in range(c, ncols):
                    if mr[j]:
                        mi[j] = sub(mi[j], frow[mr[j]])
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(field: FieldSpec, rows, ncols=None):
    """Basis of the right kernel of the matrix, as coefficient vectors."""
    if ncols is None:
        if not rows:
            raise ValueError("need ncols for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for r, pc in enumerate(pivots):
            # pivot row r: x_pc + sum(m[r][j] x_j) = 0 over free columns
            if m[r][f]:
                v[pc] = field.neg(m[r][f])
        basis.append(v)
    return basis


def rank(field: FieldSpec, rows) -> int:
    return len(rref(field, rows)[1])


def solve(field: FieldSpec, rows, rhs):
    """One solution of A x = b, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(field, aug)
    if ncols in pivots:
        return None  # pivot in the augmented column
    x = [0] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def mat_mul(field: FieldSpec, a, b):
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    mul = field._mul
    add = field.add
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                row = mul[c]
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] = add(oi[j], row[bt[j]])
    return out


def mat_vec(field: FieldSpec, a, v):
    mul = field._mul
    add = field.add
    out = []
    for row in a:
        acc = 0
        for c, x in zip(row, v):
            if c and x:
                acc = add(acc, mul[c][x])
        out.append(acc)
    return out
