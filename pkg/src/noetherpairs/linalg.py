"""Dense exact linear algebra over any field of this package."""

from __future__ import annotations


def rref(field, rows, ncols=None):
    """Reduced row-echelon form.  Returns ``(nonzero rows, pivot columns)``."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    zero = field.zero
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        prow = [x * inv if x else zero for x in rows[r]]
        rows[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], pivots


def rank(field, rows, ncols=None) -> int:
    return len(rref(field, rows, ncols)[1])


def nullspace(field, rows, ncols):
    """Basis of ``{v : rows . v = 0}``."""
    red, piv = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for i, p in enumerate(piv):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve(field, rows, rhs):
    """One solution of ``rows . x = rhs`` or ``None``."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(field, aug, ncols + 1)
    if ncols in piv:
        return None
    x = [field.zero] * ncols
    for i, p in enumerate(piv):
        x[p] = red[i][ncols]
    return x


def det(field, matrix):
    """Determinant by Gaussian elimination."""
    m = [list(r) for r in matrix]
    n = len(m)
    result = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result = result * m[c][c]
        inv = field.one / m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                for j in range(c, n):
                    m[i][j] = m[i][j] - f * m[c][j]
    return result


def in_row_space(field, rref_rows, pivots, vec) -> bool:
    """Membership of ``vec`` in the span of rows already in RREF."""
    v = list(vec)
    for row, p in zip(rref_rows, pivots):
        f = v[p]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)
