"""Linear maps between polygonal spaces.

An :class:`Operator` stores its matrix against standard coordinates (column
``k`` is the image of the ``k``-th unit vector).  Because the domain ball
is the convex hull of its extreme points, the operator norm is the largest
codomain gauge over the images of the generators.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import DegenerateSpace, DimensionMismatch, IncompatibleFields, NormExceedsOne, ZeroOperator
from .linalg import ZERO, Vector, dot, independent_rows, inverse, matmul, matvec, transpose, vec
from .scalar import FieldSpec, Scalar, ScalarLike, as_scalar, common_field
from .space import PolygonalSpace, extreme_points, gauge

__all__ = [
    "ActiveSet",
    "Operator",
    "active_set",
    "apply",
    "attainment_set",
    "check_fields",
    "from_images",
    "op_norm",
]

MatrixT = tuple[tuple[Scalar, ...], ...]


def check_fields(*fields: FieldSpec) -> FieldSpec:
    d = 1
    for f in fields:
        if f.d != 1:
            if d != 1 and f.d != d:
                raise IncompatibleFields(f"spaces over sqrt({d}) and sqrt({f.d}) cannot be combined")
            d = f.d
    return FieldSpec(d)


@dataclass(frozen=True, eq=False)
class Operator:
    """``T`` in ``L(X, Y)`` as an ``m x n`` matrix of exact scalars."""

    matrix: MatrixT
    domain: PolygonalSpace
    codomain: PolygonalSpace

    def __init__(self, matrix: Iterable[Iterable[ScalarLike]], domain: PolygonalSpace, codomain: PolygonalSpace):
        M = tuple(vec(row) for row in matrix)
        if len(M) != codomain.n or any(len(row) != domain.n for row in M):
            raise DimensionMismatch(
                f"matrix must be {codomain.n}x{domain.n} for these spaces"
            )
        check_fields(domain.field, codomain.field, common_field(x for row in M for x in row))
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain", codomain)

    @property
    def shape(self) -> tuple[int, int]:
        return self.codomain.n, self.domain.n

    def flat(self) -> Vector:
        """Entries in row-major order; the coordinates used in matrix space."""
        return tuple(x for row in self.matrix for x in row)

    @classmethod
    def from_flat(cls, flat: Sequence[Scalar], domain: PolygonalSpace, codomain: PolygonalSpace) -> Operator:
        n = domain.n
        return cls([flat[j * n : (j + 1) * n] for j in range(codomain.n)], domain, codomain)

    @classmethod
    def zero(cls, domain: PolygonalSpace, codomain: PolygonalSpace) -> Operator:
        return cls([[ZERO] * domain.n for _ in range(codomain.n)], domain, codomain)

    def __call__(self, x: Sequence[ScalarLike]) -> Vector:
        return apply(self, x)

    def _like(self, M) -> Operator:
        return Operator(M, self.domain, self.codomain)

    def __add__(self, other: Operator) -> Operator:
        return self._like([[x + y for x, y in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other: Operator) -> Operator:
        return self._like([[x - y for x, y in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __neg__(self) -> Operator:
        return self._like([[-x for x in r] for r in self.matrix])

    def __mul__(self, c: ScalarLike) -> Operator:
        c = as_scalar(c)
        return self._like([[c * x for x in r] for r in self.matrix])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Operator):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __lt__(self, other: Operator) -> bool:
        return self.flat() < other.flat()

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.matrix)
        return f"Operator([{rows}])"


def from_images(domain: PolygonalSpace, codomain: PolygonalSpace, images: Sequence[Sequence[ScalarLike]]) -> Operator:
    """The operator sending the first ``n`` independent generators to ``images``.

    ``images[k]`` is the image of the ``k``-th generator of the basis chosen
    by scanning the generators in order (for the catalog spaces this is
    simply ``x_1, ..., x_n``).
    """
    basis = independent_rows(domain.generators, limit=domain.n)
    if len(basis) < domain.n:
        raise DegenerateSpace("domain generators do not contain a basis")
    if len(images) != domain.n:
        raise DimensionMismatch(f"need {domain.n} images, got {len(images)}")
    imgs = [vec(y) for y in images]
    if any(len(y) != codomain.n for y in imgs):
        raise DimensionMismatch(f"images must have length {codomain.n}")
    G = transpose([domain.generators[i] for i in basis])
    Ginv = inverse(G)
    assert Ginv is not None
    M = matmul(transpose(imgs), Ginv)
    return Operator(M, domain, codomain)


def apply(T: Operator, x: Sequence[ScalarLike]) -> Vector:
    x = vec(x)
    if len(x) != T.domain.n:
        raise DimensionMismatch(f"vector of length {len(x)} for a domain of dimension {T.domain.n}")
    return matvec(T.matrix, x)


def op_norm(T: Operator) -> Scalar:
    return max(gauge(T.codomain, apply(T, g)) for g in T.domain.generators)


def attainment_set(T: Operator) -> list[Vector]:
    """Signed extreme points of the domain at which ``T`` attains its norm."""
    norms = [gauge(T.codomain, apply(T, x)) for x in extreme_points(T.domain)]
    top = max(norms)
    if not top:
        raise ZeroOperator("the zero operator attains its norm everywhere")
    return [x for x, v in zip(extreme_points(T.domain), norms) if v == top]


@dataclass(frozen=True)
class ActiveSet:
    """Tight constraints ``f_j(T x_i) = 1``.

    ``i`` indexes the domain generators (one per sign pair) and ``j`` the
    signed facet list of the codomain, so ``(i, j)`` also covers the tight
    constraint at ``-x_i`` with facet ``-f_j``.
    """

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def generators(self) -> set[int]:
        return {i for i, _ in self.pairs}


def active_set(T: Operator) -> ActiveSet:
    pairs = []
    for i, g in enumerate(T.domain.generators):
        y = apply(T, g)
        for j, f in enumerate(T.codomain.facets):
            v = dot(f, y)
            if v > 1:
                raise NormExceedsOne(f"f_{j}(T x_{i}) = {v} > 1")
            if v == 1:
                pairs.append((i, j))
    return ActiveSet(tuple(pairs))
