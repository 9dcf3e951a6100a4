"""The contraction polytope of ``L(X, Y)`` and its vertices.

``||T|| <= 1`` holds iff ``f(T x) <= 1`` for every generator ``x`` of the
domain and every signed facet ``f`` of the codomain.  Each such inequality
is linear in the matrix entries, so the unit ball of ``L(X, Y)`` is a
polytope in ``n*m`` dimensions whose vertices are the extreme contractions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from . import ddm
from .errors import TooLarge, UnboundedRegion
from .linalg import Vector, dot, rank
from .operator import Operator, check_fields
from .scalar import Scalar
from .space import PolygonalSpace

__all__ = [
    "ContractionBall",
    "Halfspace",
    "VertexSet",
    "brute_force_vertices",
    "build_ball",
    "constraint_functional",
    "enumerate_vertices",
]

log = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 9


def constraint_functional(f: Vector, x: Vector) -> Vector:
    """Coefficients of ``T -> f(T x)`` on row-major flattened matrices."""
    return tuple(fj * xk for fj in f for xk in x)


@dataclass(frozen=True)
class Halfspace:
    generator: int
    facet: int
    coeffs: Vector

    def __call__(self, T: Operator) -> Scalar:
        return dot(self.coeffs, T.flat())


@dataclass(frozen=True)
class ContractionBall:
    domain: PolygonalSpace
    codomain: PolygonalSpace
    halfspaces: tuple[Halfspace, ...]

    @property
    def dim(self) -> int:
        return self.domain.n * self.codomain.n

    def rows(self) -> list[Vector]:
        return [h.coeffs for h in self.halfspaces]

    def contains(self, T: Operator) -> bool:
        flat = T.flat()
        return all(dot(h.coeffs, flat) <= 1 for h in self.halfspaces)


def build_ball(X: PolygonalSpace, Y: PolygonalSpace) -> ContractionBall:
    """Halfspaces in generator-major, facet-minor order.

    One generator per sign pair suffices since ``f(T(-x)) = (-f)(T x)`` and
    the codomain facets already come in sign pairs.
    """
    check_fields(X.field, Y.field)
    hs = tuple(
        Halfspace(i, j, constraint_functional(f, x))
        for i, x in enumerate(X.generators)
        for j, f in enumerate(Y.facets)
    )
    ball = ContractionBall(X, Y, hs)
    if rank(ball.rows()) < ball.dim:
        raise UnboundedRegion("constraint functionals do not span matrix space")
    return ball


@dataclass(frozen=True)
class VertexSet:
    vertices: tuple[Operator, ...]

    @property
    def count(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, T: object) -> bool:
        return T in set(self.vertices)

    def as_set(self) -> frozenset[Operator]:
        return frozenset(self.vertices)


def _vertex_set(ball: ContractionBall, flats) -> VertexSet:
    ops = sorted({Operator.from_flat(v, ball.domain, ball.codomain) for v in flats})
    return VertexSet(tuple(ops))


def enumerate_vertices(ball: ContractionBall) -> VertexSet:
    """All extreme contractions, via the double description method."""
    verts = ddm.polytope_vertices(ball.rows())
    log.info("double description: %d vertices in dimension %d", len(verts), ball.dim)
    return _vertex_set(ball, (v for v, _ in verts))


def brute_force_vertices(ball: ContractionBall) -> VertexSet:
    """Independent oracle: solve every square subsystem of tight constraints.

    Subsets of ``n*m`` halfspace boundaries are visited in lexicographic
    order with forward elimination shared along the search path; a subset
    whose rows are already dependent is abandoned together with all of its
    supersets, since none of them has a unique solution.  Full-rank
    solutions satisfying every constraint are the vertices.
    """
    N = ball.dim
    if N > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force is limited to n*m <= {BRUTE_FORCE_LIMIT}, got {N}")
    rows = [list(r) + [Scalar(1)] for r in ball.rows()]
    found: set[Vector] = set()
    echelon: list[tuple[int, list[Scalar]]] = []

    def back_substitute() -> Vector:
        x = [Scalar(0)] * N
        for c, r in reversed(echelon):
            acc = r[N]
            for k in range(c + 1, N):
                if r[k]:
                    acc = acc - r[k] * x[k]
            x[c] = acc / r[c]
        return tuple(x)

    def visit(start: int) -> None:
        if len(echelon) == N:
            x = back_substitute()
            if x not in found and all(dot(r, x) <= 1 for r in ball.rows()):
                found.add(x)
            return
        for idx in range(start, len(rows) - (N - len(echelon) - 1)):
            v = rows[idx]
            for c, r in echelon:
                if v[c]:
                    f = v[c] / r[c]
                    v = [a - f * b for a, b in zip(v, r)]
            c = next((k for k in range(N) if v[k]), None)
            if c is None:
                continue
            echelon.append((c, v))
            echelon.sort(key=lambda e: e[0])
            visit(idx + 1)
            echelon.remove((c, v))

    visit(0)
    return _vertex_set(ball, found)
