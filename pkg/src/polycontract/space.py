"""Polygonal normed spaces given by the extreme points of their unit ball.

A space is stored by one generator per ``+-`` pair of extreme points; the
facet functionals (the vertices of the polar body) are derived once on
construction.  The norm is the gauge ``max_f f(x)`` over those facets.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, cmp_to_key

from . import ddm
from .errors import (
    DegenerateSpace,
    DimensionMismatch,
    DuplicateGenerator,
    InvalidDependency,
    RedundantGenerator,
    WrongExtremeCount,
)
from .linalg import ZERO, Vector, dot, independent_rows, rank, solve, transpose, vec
from .lp import convex_combination
from .scalar import FieldSpec, Scalar, ScalarLike, common_field

__all__ = [
    "DependencyCoefficients",
    "PolygonalSpace",
    "affine_dependence",
    "canonical_representative",
    "extreme_points",
    "gauge",
    "is_extreme_point",
    "polar_dual",
    "validate",
]


def _neg(v: Sequence[Scalar]) -> Vector:
    return tuple(-x for x in v)


def _lex_positive(v: Sequence[Scalar]) -> bool:
    lead = next((x for x in v if x), ZERO)
    return lead.sign() > 0


def canonical_representative(v: Sequence[Scalar]) -> Vector:
    """The one of ``v``, ``-v`` whose first non-zero coordinate is positive."""
    v = tuple(v)
    return v if _lex_positive(v) else _neg(v)


def _signed(reps: Sequence[Vector]) -> list[Vector]:
    return list(reps) + [_neg(v) for v in reps]


class PolygonalSpace:
    """A finite-dimensional space whose unit ball is ``conv(+-generators)``.

    Construction validates the generators (full rank, no repeats, every
    generator a genuine extreme point) and derives the facet functionals.
    Generators keep the order they were given in, so that labels such as
    ``x_1, x_2, x_3`` stay meaningful; canonical orderings are available
    separately where a deterministic set representation is needed.
    """

    def __init__(self, generators: Iterable[Iterable[ScalarLike]], name: str | None = None) -> None:
        gens = tuple(vec(g) for g in generators)
        if not gens:
            raise DegenerateSpace("a space needs at least one generator")
        n = len(gens[0])
        if n == 0 or any(len(g) != n for g in gens):
            raise DimensionMismatch("generators must share a positive dimension")
        self._field = common_field(x for g in gens for x in g)
        self._n = n
        self._generators = gens
        self.name = name
        _check_generators(gens, n)
        self._facets = polar_dual(self)
        for i, g in enumerate(gens):
            if max(dot(f, g) for f in self._facets) != 1:
                raise DegenerateSpace(f"generator {i} does not lie on the unit sphere of its own gauge")

    @property
    def n(self) -> int:
        return self._n

    @property
    def field(self) -> FieldSpec:
        return self._field

    @property
    def generators(self) -> tuple[Vector, ...]:
        return self._generators

    @property
    def facets(self) -> tuple[Vector, ...]:
        """Signed facet functionals: canonical representatives, then their negatives."""
        return self._facets

    @property
    def facet_pairs(self) -> tuple[Vector, ...]:
        return self._facets[: len(self._facets) // 2]

    @cached_property
    def extreme_point_set(self) -> frozenset[Vector]:
        return frozenset(_signed(self._generators))

    def canonical_generators(self) -> list[Vector]:
        return sorted(canonical_representative(g) for g in self._generators)

    def __len__(self) -> int:
        return 2 * len(self._generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolygonalSpace):
            return NotImplemented
        return self.n == other.n and self.canonical_generators() == other.canonical_generators()

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.canonical_generators())))

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"PolygonalSpace({label}n={self.n}, extreme_points={len(self)})"


def _check_generators(gens: tuple[Vector, ...], n: int) -> None:
    if rank(gens) < n:
        raise DegenerateSpace(f"generators span a space of rank {rank(gens)} < {n}")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if gens[j] == gens[i] or gens[j] == _neg(gens[i]):
                raise DuplicateGenerator(f"generator {j} repeats generator {i} up to sign")
    signed = _signed(gens)
    for i, g in enumerate(gens):
        others = [p for k, p in enumerate(signed) if k != i]
        w = convex_combination(others, g)
        if w is not None:
            idx = [k for k in range(len(signed)) if k != i]
            witness = {idx[k]: wk for k, wk in enumerate(w) if wk}
            raise RedundantGenerator(
                f"generator {i} is a convex combination of the other signed points", i, witness
            )


def validate(generators: Iterable[Iterable[ScalarLike]], name: str | None = None) -> PolygonalSpace:
    """Build and validate a space from raw generators."""
    return PolygonalSpace(generators, name)


# -- polar duality ---------------------------------------------------------


def _half(v: Vector) -> int:
    x, y = v
    return 0 if (y.sign() > 0 or (not y and x.sign() > 0)) else 1


def _angular_cmp(u: Vector, v: Vector) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    return -(u[0] * v[1] - u[1] * v[0]).sign()


def _planar_facets(points: list[Vector]) -> list[Vector]:
    ring = sorted(points, key=cmp_to_key(_angular_cmp))
    facets = []
    for k, u in enumerate(ring):
        w = ring[(k + 1) % len(ring)]
        f = solve([u, w], [Scalar(1), Scalar(1)])
        if f is None:
            raise DegenerateSpace("consecutive vertices are parallel")
        facets.append(f)
    return facets


def _dd_facets(points: list[Vector]) -> list[Vector]:
    return [f for f, _ in ddm.polytope_vertices(points)]


def polar_dual(space: PolygonalSpace | Sequence[Sequence[Scalar]]) -> tuple[Vector, ...]:
    """Facet functionals of ``conv(+-generators)``.

    The result lists the lexicographically positive representatives in
    sorted order followed by their negatives.  Dimension two uses angular
    ordering of the vertices; higher dimensions enumerate the vertices of
    the polar polytope with the double description method.
    """
    gens = space.generators if isinstance(space, PolygonalSpace) else tuple(vec(g) for g in space)
    n = len(gens[0])
    points = _signed(gens)
    if rank(gens) < n:
        raise DegenerateSpace("generators do not span the space")
    if n == 1:
        facets = [(Scalar(1) / abs(g[0]),) for g in gens]
        facets = [min(facets, key=lambda f: f[0])]
    elif n == 2:
        facets = _planar_facets(points)
    else:
        facets = _dd_facets(points)
    reps = sorted({canonical_representative(f) for f in facets})
    return tuple(_signed(reps))


# -- norm and extreme points -----------------------------------------------


def gauge(space: PolygonalSpace, x: Sequence[ScalarLike]) -> Scalar:
    """The norm of ``x``: the largest facet functional value."""
    x = vec(x)
    if len(x) != space.n:
        raise DimensionMismatch(f"vector of length {len(x)} in a space of dimension {space.n}")
    return max(dot(f, x) for f in space.facets)


def extreme_points(space: PolygonalSpace) -> list[Vector]:
    """All signed extreme points: the generators, then their negatives."""
    return _signed(space.generators)


def is_extreme_point(space: PolygonalSpace, y: Sequence[ScalarLike]) -> bool:
    y = vec(y)
    if len(y) != space.n:
        raise DimensionMismatch(f"vector of length {len(y)} in a space of dimension {space.n}")
    return y in space.extreme_point_set


@dataclass(frozen=True)
class DependencyCoefficients:
    """``generators[dependent] == sum(alphas[k] * generators[basis[k]])``."""

    basis: tuple[int, ...]
    dependent: int
    alphas: tuple[Scalar, ...]


def affine_dependence(space: PolygonalSpace) -> DependencyCoefficients:
    """Express the one generator outside a basis in terms of the basis.

    Only defined for spaces with exactly ``2n + 2`` extreme points.
    """
    gens = space.generators
    if len(gens) != space.n + 1:
        raise WrongExtremeCount(f"expected {2 * space.n + 2} extreme points, found {2 * len(gens)}")
    basis = independent_rows(gens, limit=space.n)
    dependent = next(i for i in range(len(gens)) if i not in basis)
    G = transpose([gens[i] for i in basis])
    alphas = solve(G, gens[dependent])
    assert alphas is not None
    if sum(1 for a in alphas if a) < 2:
        raise InvalidDependency("fewer than two non-zero coefficients: a generator repeats a basis vector")
    return DependencyCoefficients(tuple(basis), dependent, alphas)
