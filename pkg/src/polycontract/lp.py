"""Exact phase-one simplex for convex-combination feasibility.

Used as an independent membership oracle (is a point in the convex hull of
a finite set?) and to produce redundancy witnesses during space validation.
Bland's rule guarantees termination; all arithmetic is exact.
"""

from __future__ import annotations

from collections.abc import Sequence

from .linalg import ONE, ZERO
from .scalar import Scalar


def nonnegative_solution(A: Sequence[Sequence[Scalar]], b: Sequence[Scalar]) -> list[Scalar] | None:
    """Return some ``x >= 0`` with ``A x = b``, or ``None`` if there is none."""
    m = len(A)
    k = len(A[0]) if m else 0
    rows: list[list[Scalar]] = []
    for i in range(m):
        row = list(A[i]) + [ONE if j == i else ZERO for j in range(m)] + [b[i]]
        if b[i].sign() < 0:
            row = [-x for x in row[:k]] + row[k:-1] + [-b[i]]
        rows.append(row)
    width = k + m
    basis = [k + i for i in range(m)]
    # reduced-cost row for minimising the sum of artificials
    z = [ZERO] * (width + 1)
    for row in rows:
        for j in list(range(k)) + [width]:
            z[j] = z[j] + row[j]

    while True:
        enter = next((j for j in range(width) if z[j].sign() > 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            if row[enter].sign() > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded phase-one objective cannot happen
            raise RuntimeError("phase-one simplex became unbounded")
        r = best[1]
        inv = ONE / rows[r][enter]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        if z[enter]:
            f = z[enter]
            z = [x - f * y for x, y in zip(z, rows[r])]
        basis[r] = enter

    if z[width]:
        return None
    x = [ZERO] * k
    for i, j in enumerate(basis):
        if j < k:
            x[j] = rows[i][width]
    return x


def convex_combination(points: Sequence[Sequence[Scalar]], target: Sequence[Scalar]) -> list[Scalar] | None:
    """Weights ``w >= 0`` summing to one with ``sum w_k * points[k] == target``."""
    if not points:
        return None
    n = len(target)
    A = [[p[c] for p in points] for c in range(n)] + [[ONE] * len(points)]
    b = list(target) + [ONE]
    return nonnegative_solution(A, b)
