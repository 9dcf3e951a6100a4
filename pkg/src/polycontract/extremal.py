"""Extremality certificates for contractions and the L-P style predicates.

A contraction ``T`` is a vertex of the contraction polytope exactly when
the functionals ``S -> f_j(S x_i)`` that are tight at ``T`` span the dual
of matrix space.  When they do not, any matrix ``D`` in their common kernel
moves ``T`` along a segment inside the ball, and the ratio test gives how
far: ``T = (T1 + T2) / 2`` with ``T1, T2 = T +- eps D``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalGeometry, NormExceedsOne, NormNotOne
from .enumeration import build_ball, constraint_functional
from .linalg import Vector, det, dot, independent_rows, nullspace, rank
from .operator import ActiveSet, Operator, active_set, apply, attainment_set, op_norm
from .scalar import Scalar
from .space import extreme_points, is_extreme_point

__all__ = [
    "EXTREME",
    "NOT_EXTREME",
    "ExtremalityCertificate",
    "WeakLPResult",
    "check_certificate",
    "is_extreme",
    "lp_image_check",
    "span_check",
    "weak_lp_holds",
]

EXTREME = "Extreme"
NOT_EXTREME = "NotExtreme"


@dataclass(frozen=True)
class ExtremalityCertificate:
    verdict: str
    operator: Operator
    active: ActiveSet
    # Extreme: n*m active (generator, facet) pairs with independent functionals
    spanning: tuple[tuple[int, int], ...] = ()
    determinant: Scalar | None = None
    # NotExtreme: T = (t1 + t2) / 2 with t1, t2 = T +- epsilon * direction
    direction: Operator | None = None
    epsilon: Scalar | None = None
    t1: Operator | None = field(default=None, repr=False)
    t2: Operator | None = field(default=None, repr=False)

    @property
    def is_extreme(self) -> bool:
        return self.verdict == EXTREME


def _functional(T: Operator, i: int, j: int) -> Vector:
    return constraint_functional(T.codomain.facets[j], T.domain.generators[i])


def is_extreme(T: Operator) -> ExtremalityCertificate:
    """Decide whether ``T`` is an extreme contraction, with a witness either way."""
    if op_norm(T) > 1:
        raise NormExceedsOne(f"operator norm {op_norm(T)} exceeds one")
    N = T.domain.n * T.codomain.n
    act = active_set(T)
    rows = [_functional(T, i, j) for i, j in act]
    basis = independent_rows(rows, limit=N)
    if len(basis) == N:
        return ExtremalityCertificate(
            EXTREME,
            T,
            act,
            spanning=tuple(act.pairs[k] for k in basis),
            determinant=det([rows[k] for k in basis]),
        )

    D = nullspace(rows, N)[0]
    flat = T.flat()
    eps = None
    for h in build_ball(T.domain, T.codomain).halfspaces:
        slope = dot(h.coeffs, D)
        if slope:
            step = (1 - dot(h.coeffs, flat)) / abs(slope)
            if eps is None or step < eps:
                eps = step
    if eps is None:
        raise InternalGeometry("kernel direction is not limited by any constraint")
    direction = Operator.from_flat(D, T.domain, T.codomain)
    return ExtremalityCertificate(
        NOT_EXTREME,
        T,
        act,
        direction=direction,
        epsilon=eps,
        t1=T + direction * eps,
        t2=T - direction * eps,
    )


def check_certificate(cert: ExtremalityCertificate) -> bool:
    """Re-verify a certificate from its contents alone."""
    T = cert.operator
    if cert.is_extreme:
        N = T.domain.n * T.codomain.n
        if len(cert.spanning) != N or len(set(cert.spanning)) != N:
            return False
        rows = []
        for i, j in cert.spanning:
            x = T.domain.generators[i]
            f = T.codomain.facets[j]
            if dot(f, apply(T, x)) != 1:
                return False
            rows.append([f[a] * x[b] for a in range(T.codomain.n) for b in range(T.domain.n)])
        d = det(rows)
        return bool(d) and (cert.determinant is None or d == cert.determinant)
    t1, t2 = cert.t1, cert.t2
    if t1 is None or t2 is None:
        return False
    if t1 == T or t2 == T or t1 + t2 != T * 2:
        return False
    return op_norm(t1) <= 1 and op_norm(t2) <= 1


@dataclass(frozen=True)
class WeakLPResult:
    holds: bool
    witness: Vector | None
    images: tuple[tuple[Vector, Vector], ...]

    def __bool__(self) -> bool:
        return self.holds


def weak_lp_holds(T: Operator) -> WeakLPResult:
    """Whether some extreme point of the domain maps onto an extreme point."""
    images = tuple((x, apply(T, x)) for x in extreme_points(T.domain))
    for x, y in images:
        if is_extreme_point(T.codomain, y):
            return WeakLPResult(True, x, images)
    return WeakLPResult(False, None, images)


def lp_image_check(T: Operator) -> bool:
    """Whether every extreme point of the domain maps onto an extreme point."""
    return all(is_extreme_point(T.codomain, apply(T, x)) for x in extreme_points(T.domain))


def span_check(T: Operator) -> bool:
    """Whether the norm-attaining extreme points span the domain."""
    if op_norm(T) != 1:
        raise NormNotOne(f"operator norm is {op_norm(T)}, not 1")
    return rank(attainment_set(T)) == T.domain.n
