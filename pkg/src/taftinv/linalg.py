"""Exact dense linear algebra over a field given by Python number objects.

Entries only need ``+ - * /`` and truthiness (zero is falsy), so this works
for both ``Fraction`` and ``CycNum``.
"""

from __future__ import annotations


def rref(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns. Input is not modified."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list]) -> int:
    return len(rref(rows)[1])


def nullspace(matrix: list[list], ncols: int | None = None, zero=0, one=1) -> list[list]:
    """Basis of {v : matrix @ v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    red, pivots = rref(matrix) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    return basis


def in_span(vectors: list[list], v: list) -> bool:
    if not any(v):
        return True
    if not vectors:
        return False
    return rank(vectors + [v]) == rank(vectors)


def matmul(a: list[list], b: list[list], zero=0) -> list[list]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    y = bt[j]
                    if y:
                        row[j] = row[j] + x * y
    return out


def identity(n: int, zero=0, one=1) -> list[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matpow(a: list[list], e: int, zero=0, one=1) -> list[list]:
    result = identity(len(a), zero, one)
    base = a
    while e:
        if e & 1:
            result = matmul(result, base, zero)
        e >>= 1
        if e:
            base = matmul(base, base, zero)
    return result


def is_zero_matrix(a: list[list]) -> bool:
    return not any(x for row in a for x in row)
