"""Incremental double description method over exact scalars.

The polytope ``{x : L x <= 1}`` is lifted to the cone
``{(t, x) : t - L x >= 0, t >= 0}``; its extreme rays with ``t > 0`` are the
vertices.  Constraints are inserted one at a time in the given order; two
rays are combined only when they are adjacent, decided by the exact rank of
their common tight constraints.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from .errors import UnboundedRegion
from .linalg import ONE, ZERO, Vector, dot, independent_rows, inverse, rank
from .scalar import Scalar

log = logging.getLogger(__name__)


def _normalize(ray: Sequence[Scalar]) -> Vector:
    lead = next(x for x in ray if x)
    if lead == ONE:
        return tuple(ray)
    s = abs(lead)
    return tuple(x / s for x in ray)


def extreme_rays(A: Sequence[Sequence[Scalar]]) -> list[tuple[Vector, frozenset[int]]]:
    """Extreme rays of the pointed cone ``{y : A y >= 0}``.

    Returns ``(ray, tight)`` pairs where ``tight`` is the set of row indices
    with ``A[i] . ray == 0``.  Rays are scaled so that their first non-zero
    coordinate has absolute value one.
    """
    dim = len(A[0])
    init = independent_rows(A, limit=dim)
    if len(init) < dim:
        raise UnboundedRegion(f"constraint family has rank {len(init)} < {dim}; the cone is not pointed")
    Binv = inverse([A[i] for i in init])
    assert Binv is not None
    rays: list[Vector] = []
    tight: list[frozenset[int]] = []
    for k in range(dim):
        rays.append(_normalize([Binv[r][k] for r in range(dim)]))
        tight.append(frozenset(init[i] for i in range(dim) if i != k))

    rank_cache: dict[frozenset[int], int] = {}

    def face_rank(rows: frozenset[int]) -> int:
        r = rank_cache.get(rows)
        if r is None:
            r = rank([A[i] for i in sorted(rows)])
            rank_cache[rows] = r
        return r

    chosen = set(init)
    for idx in range(len(A)):
        if idx in chosen:
            continue
        a = A[idx]
        vals = [dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v.sign() > 0]
        neg = [i for i, v in enumerate(vals) if v.sign() < 0]
        zer = [i for i, v in enumerate(vals) if not v]
        new_rays: list[Vector] = []
        new_tight: list[frozenset[int]] = []
        for p in pos:
            for q in neg:
                common = tight[p] & tight[q]
                if len(common) < dim - 2 or face_rank(common) != dim - 2:
                    continue
                vp, vq = vals[p], vals[q]
                r = tuple(vp * y - vq * x for x, y in zip(rays[p], rays[q]))
                new_rays.append(_normalize(r))
                new_tight.append(common | {idx})
        rays = [rays[i] for i in pos] + [rays[i] for i in zer] + new_rays
        tight = [tight[i] for i in pos] + [tight[i] | {idx} for i in zer] + new_tight
        log.debug("inserted row %d: %d rays", idx, len(rays))
    return list(zip(rays, tight))


def polytope_vertices(L: Sequence[Sequence[Scalar]]) -> list[tuple[Vector, frozenset[int]]]:
    """Vertices of the bounded polytope ``{x : L[i] . x <= 1 for all i}``.

    Each vertex comes with the indices of the rows tight at it; the list is
    sorted lexicographically.
    """
    n = len(L[0])
    lifted = [(ONE,) + tuple(-x for x in row) for row in L]
    lifted.append((ONE,) + (ZERO,) * n)
    t_row = len(L)
    out: dict[Vector, frozenset[int]] = {}
    for ray, tz in extreme_rays(lifted):
        t = ray[0]
        if not t:
            raise UnboundedRegion("polytope has a recession direction")
        v = tuple(x / t for x in ray[1:])
        out[v] = out.get(v, frozenset()) | (tz - {t_row})
    return sorted(out.items())
