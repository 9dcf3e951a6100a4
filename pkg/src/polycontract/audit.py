"""Pair-wide audits of the L-P and weak L-P properties, and the support-set lemma.

``audit_pair`` enumerates every extreme contraction of ``L(X, Y)`` and
tests the property on each.  ``lemma_check`` exhaustively verifies the
combinatorial statement about families of supports of non-extreme unit
vectors of ``l_1^m`` that underlies the ``l_1`` codomain theorem.
"""

from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .enumeration import VertexSet, build_ball, enumerate_vertices
from .errors import PreconditionViolated, TheoremViolation, TooLarge
from .extremal import ExtremalityCertificate, is_extreme, lp_image_check, span_check, weak_lp_holds
from .linalg import ONE, ZERO, Vector, independent_rows
from .operator import Operator, apply, from_images
from .space import PolygonalSpace, extreme_points, is_extreme_point

__all__ = [
    "AuditReport",
    "LemmaReport",
    "Violation",
    "audit_pair",
    "codomain_kind",
    "image_preserving_operators",
    "lemma_check",
    "lemma_check_naive",
    "verify_theorem_precondition",
]

log = logging.getLogger(__name__)

WEAK_LP = "weak-lp"
LP = "lp"


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("EC_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    n = _workers()
    if n == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# -- theorem hypotheses ----------------------------------------------------


def codomain_kind(Y: PolygonalSpace) -> str | None:
    """``"linf"`` or ``"l1"`` if ``Y`` is exactly that standard space, else ``None``."""
    m = Y.n
    signs = {tuple(ONE if s > 0 else -ONE for s in p) for p in itertools.product((1, -1), repeat=m)}
    if Y.extreme_point_set == signs:
        return "linf"
    units = set()
    for j in range(m):
        e = tuple(ONE if k == j else ZERO for k in range(m))
        units |= {e, tuple(-x for x in e)}
    if Y.extreme_point_set == units:
        return "l1"
    return None


def verify_theorem_precondition(X: PolygonalSpace, Y: PolygonalSpace, theorem: str) -> bool:
    """Hypotheses of the weak L-P theorems.

    ``th1``: ``X`` has exactly ``2n+2`` extreme points and ``Y = l_inf^m``
    with ``m <= n``.  ``th2``: same domain condition, ``Y = l_1^m`` with
    ``m(m-1) <= n``.
    """
    if theorem not in ("th1", "th2"):
        raise ValueError(f"unknown theorem {theorem!r}")
    n, m = X.n, Y.n
    if len(X) != 2 * n + 2:
        return False
    kind = codomain_kind(Y)
    if theorem == "th1":
        return kind == "linf" and m <= n
    return kind == "l1" and m * (m - 1) <= n


# -- pair audits -----------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str
    operator: Operator
    certificate: ExtremalityCertificate
    images: tuple[tuple[Vector, Vector], ...]


@dataclass
class AuditReport:
    domain: str
    codomain: str
    property: str
    vertex_count: int
    violations: list[Violation] = field(default_factory=list)
    preconditions: dict[str, bool] = field(default_factory=dict)
    span_failures: int = 0
    vertices: VertexSet | None = field(default=None, repr=False)

    @property
    def verdict(self) -> str:
        return "holds" if not self.violations else "fails"

    @property
    def holds(self) -> bool:
        return not self.violations


def image_preserving_operators(X: PolygonalSpace, Y: PolygonalSpace) -> list[Operator]:
    """Every operator mapping all extreme points of ``X`` onto extreme points of ``Y``.

    Such an operator is fixed by the images of a basis, so it suffices to
    try each assignment of extreme points of ``Y`` to the basis generators
    and keep the ones consistent with the remaining generators.
    """
    basis = independent_rows(X.generators, limit=X.n)
    rest = [g for i, g in enumerate(X.generators) if i not in basis]
    targets = sorted(Y.extreme_point_set)
    found = set()
    for images in itertools.product(targets, repeat=X.n):
        T = from_images(X, Y, list(images))
        if all(is_extreme_point(Y, apply(T, g)) for g in rest):
            found.add(T)
    return sorted(found)


def _images(T: Operator) -> tuple[tuple[Vector, Vector], ...]:
    return tuple((x, apply(T, x)) for x in extreme_points(T.domain))


def audit_pair(X: PolygonalSpace, Y: PolygonalSpace, prop: str = WEAK_LP) -> AuditReport:
    """Check the L-P (``"lp"``) or weak L-P (``"weak-lp"``) property of ``(X, Y)``.

    Raises :class:`TheoremViolation` if a weak L-P audit fails although the
    hypotheses of one of the weak L-P theorems were verified for the pair.
    """
    if prop not in (WEAK_LP, LP):
        raise ValueError(f"unknown property {prop!r}")
    V = enumerate_vertices(build_ball(X, Y))
    report = AuditReport(
        domain=X.name or "domain",
        codomain=Y.name or "codomain",
        property=prop,
        vertex_count=V.count,
        preconditions={t: verify_theorem_precondition(X, Y, t) for t in ("th1", "th2")},
        vertices=V,
    )

    def examine(T: Operator) -> tuple[Violation | None, bool]:
        ok = weak_lp_holds(T).holds if prop == WEAK_LP else lp_image_check(T)
        violation = None
        if not ok:
            kind = "no-extreme-image" if prop == WEAK_LP else "non-extreme-image"
            violation = Violation(kind, T, is_extreme(T), _images(T))
        return violation, span_check(T)

    for violation, spans in _pmap(examine, V.vertices):
        if violation is not None:
            report.violations.append(violation)
        if not spans:
            report.span_failures += 1

    if prop == LP:
        vertex_set = V.as_set()
        for T in image_preserving_operators(X, Y):
            if T not in vertex_set:
                report.violations.append(Violation("image-preserving-not-extreme", T, is_extreme(T), _images(T)))

    log.info("%s audit of (%s, %s): %d vertices, %d violations",
             prop, report.domain, report.codomain, V.count, len(report.violations))
    if prop == WEAK_LP and not report.holds and any(report.preconditions.values()):
        raise TheoremViolation(
            f"weak L-P fails for ({report.domain}, {report.codomain}) although "
            f"theorem hypotheses hold: {report.preconditions}",
            report,
        )
    return report


# -- support-set lemma -----------------------------------------------------


@dataclass
class LemmaReport:
    m: int
    k: int
    claim: str
    holds: bool
    families_checked: int
    counterexample: tuple[tuple[int, ...], ...] | None = None
    # families in which no three members share two coordinates
    surviving: list[tuple[tuple[int, ...], ...]] = field(default_factory=list)


def _members(mask: int, m: int) -> tuple[int, ...]:
    return tuple(j + 1 for j in range(m) if mask >> j & 1)


def _supports(m: int) -> list[int]:
    return [s for s in range(1, 1 << m) if bin(s).count("1") >= 2]


def _check_args(m: int, k: int, claim: str) -> None:
    if claim not in ("i", "ii"):
        raise ValueError(f"claim must be 'i' or 'ii', got {claim!r}")
    if m < 2:
        raise PreconditionViolated("the lemma needs m >= 2")
    if m > 4:
        raise TooLarge("exhaustive lemma check is limited to m <= 4")
    bound = m * (m - 1)
    if claim == "i" and not k > bound:
        raise PreconditionViolated(f"claim i needs k > m(m-1) = {bound}, got k = {k}")
    if claim == "ii" and k != bound:
        raise PreconditionViolated(f"claim ii needs k = m(m-1) = {bound}, got k = {k}")


def _has_heavy_triple(family: tuple[int, ...]) -> bool:
    return any(bin(a & b & c).count("1") >= 2 for a, b, c in itertools.combinations(family, 3))


def _claim_ii_conclusion(family: tuple[int, ...], m: int) -> bool:
    pairs = [(1 << a) | (1 << b) for a, b in itertools.combinations(range(m), 2)]
    return all(bin(s).count("1") == 2 for s in family) and all(family.count(p) == 2 for p in pairs)


def _judge(family: tuple[int, ...], m: int, claim: str) -> bool:
    """Whether ``family`` (no heavy triple) satisfies the claim."""
    return False if claim == "i" else _claim_ii_conclusion(family, m)


def lemma_check(m: int, k: int, claim: str) -> LemmaReport:
    """Exhaustively check claim ``"i"`` or ``"ii"`` over all families of ``k`` supports.

    A family is a multiset of subsets of ``{1..m}`` of size at least two.
    Three members share two coordinates iff some pair of coordinates lies
    in three members, so the search tracks per-pair multiplicities and
    counts every extension of a family that already has such a triple
    without visiting it: those families satisfy claim i and fall outside
    the hypothesis of claim ii.
    """
    _check_args(m, k, claim)
    supports = _supports(m)
    pair_bits = [(1 << a) | (1 << b) for a, b in itertools.combinations(range(m), 2)]
    covers = [[p for p, bits in enumerate(pair_bits) if s & bits == bits] for s in supports]
    counts = [0] * len(pair_bits)
    report = LemmaReport(m, k, claim, True, 0)
    family: list[int] = []

    def visit(start: int, remaining: int) -> None:
        if remaining == 0:
            report.families_checked += 1
            fam = tuple(family)
            assert not _has_heavy_triple(fam)
            report.surviving.append(tuple(_members(s, m) for s in fam))
            if not _judge(fam, m, claim) and report.holds:
                report.holds = False
                report.counterexample = report.surviving[-1]
            return
        for idx in range(start, len(supports)):
            family.append(supports[idx])
            for p in covers[idx]:
                counts[p] += 1
            if any(counts[p] >= 3 for p in covers[idx]):
                # every completion from supports[idx:] keeps the heavy triple
                report.families_checked += comb(len(supports) - idx + remaining - 2, remaining - 1)
            else:
                visit(idx, remaining - 1)
            for p in covers[idx]:
                counts[p] -= 1
            family.pop()

    visit(0, k)
    expected = comb(len(supports) + k - 1, k)
    if report.families_checked != expected:
        raise AssertionError(f"visited {report.families_checked} families, expected {expected}")
    return report


def lemma_check_naive(m: int, k: int, claim: str) -> LemmaReport:
    """Literal enumeration of every family and every triple; slow, used as an oracle."""
    _check_args(m, k, claim)
    report = LemmaReport(m, k, claim, True, 0)
    for fam in itertools.combinations_with_replacement(_supports(m), k):
        report.families_checked += 1
        if _has_heavy_triple(fam):
            continue
        report.surviving.append(tuple(_members(s, m) for s in fam))
        if not _judge(fam, m, claim) and report.holds:
            report.holds = False
            report.counterexample = report.surviving[-1]
    return report
