"""Exact dense linear algebra over :class:`~polycontract.scalar.Scalar`.

Plain Gaussian elimination; matrices are sequences of row sequences.  The
sizes involved here (at most a few dozen rows, ~10 columns) make anything
cleverer unnecessary.
"""

from __future__ import annotations

from collections.abc import Sequence

from .scalar import Scalar, as_scalar

ZERO = Scalar(0)
ONE = Scalar(1)

Vector = tuple[Scalar, ...]
Matrix = Sequence[Sequence[Scalar]]


def vec(values) -> Vector:
    return tuple(as_scalar(v) for v in values)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def scale(c: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(c * x for x in v)


def add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(x + y for x, y in zip(u, v))


def sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def matvec(A: Matrix, x: Sequence[Scalar]) -> Vector:
    return tuple(dot(row, x) for row in A)


def matmul(A: Matrix, B: Matrix) -> list[list[Scalar]]:
    cols = list(zip(*B))
    return [[dot(row, col) for col in cols] for row in A]


def transpose(A: Matrix) -> list[list[Scalar]]:
    return [list(c) for c in zip(*A)]


def rref(A: Matrix, ncols: int | None = None) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    M = [list(row) for row in A]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = ONE / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def rank(A: Matrix) -> int:
    rows = [list(row) for row in A]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for c in range(ncols):
        p = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        piv = rows[rk][c]
        for i in range(rk + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rk])]
        rk += 1
        if rk == len(rows):
            break
    return rk


def independent_rows(A: Matrix, limit: int | None = None) -> list[int]:
    """Indices of the first maximal linearly independent subset, scanning in order."""
    basis: list[tuple[int, list[Scalar]]] = []  # (pivot column, reduced row)
    chosen: list[int] = []
    for idx, row in enumerate(A):
        v = list(row)
        for c, b in basis:
            if v[c]:
                f = v[c] / b[c]
                v = [x - f * y for x, y in zip(v, b)]
        c = next((k for k, x in enumerate(v) if x), None)
        if c is None:
            continue
        basis.append((c, v))
        chosen.append(idx)
        if limit is not None and len(chosen) == limit:
            break
    return chosen


def nullspace(A: Matrix, ncols: int) -> list[Vector]:
    """Basis of ``{x : A x = 0}``, one vector per free column in increasing order."""
    if not A:
        return [tuple(ONE if k == c else ZERO for k in range(ncols)) for c in range(ncols)]
    R, pivots = rref(A, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for r, p in enumerate(pivots):
            x[p] = -R[r][f]
        basis.append(tuple(x))
    return basis


def det(A: Matrix) -> Scalar:
    M = [list(row) for row in A]
    n = len(M)
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            M[c], M[p] = M[p], M[c]
            result = -result
        piv = M[c][c]
        result = result * piv
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / piv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return result


def solve(A: Matrix, b: Sequence[Scalar]) -> Vector | None:
    """Unique solution of the square system ``A x = b``, or ``None`` if singular."""
    n = len(A)
    aug = [list(row) + [b[i]] for i, row in enumerate(A)]
    R, pivots = rref(aug, n)
    if len(pivots) < n:
        return None
    return tuple(R[i][n] for i in range(n))


def inverse(A: Matrix) -> list[list[Scalar]] | None:
    n = len(A)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug, n)
    if len(pivots) < n:
        return None
    return [row[n:] for row in R]
