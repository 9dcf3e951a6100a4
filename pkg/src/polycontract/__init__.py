"""Exact extreme-contraction toolkit for polygonal normed spaces.

Spaces are symmetric polytopes over Q or a real quadratic field; the
package computes operator norms, certifies extreme contractions, enumerates
all of them and audits pairs of spaces for the (weak) L-P property.
"""

from .audit import AuditReport, LemmaReport, audit_pair, lemma_check, verify_theorem_precondition
from .catalog import get_operator, get_space
from .enumeration import ContractionBall, VertexSet, brute_force_vertices, build_ball, enumerate_vertices
from .extremal import (
    ExtremalityCertificate,
    check_certificate,
    is_extreme,
    lp_image_check,
    span_check,
    weak_lp_holds,
)
from .operator import Operator, active_set, apply, attainment_set, from_images, op_norm
from .scalar import FieldSpec, Scalar, format_scalar, parse_scalar, sqrt
from .space import (
    PolygonalSpace,
    affine_dependence,
    extreme_points,
    gauge,
    is_extreme_point,
    polar_dual,
    validate,
)

__all__ = [
    "AuditReport",
    "ContractionBall",
    "ExtremalityCertificate",
    "FieldSpec",
    "LemmaReport",
    "Operator",
    "PolygonalSpace",
    "Scalar",
    "VertexSet",
    "active_set",
    "affine_dependence",
    "apply",
    "attainment_set",
    "audit_pair",
    "brute_force_vertices",
    "build_ball",
    "check_certificate",
    "enumerate_vertices",
    "extreme_points",
    "format_scalar",
    "from_images",
    "gauge",
    "get_operator",
    "get_space",
    "is_extreme",
    "is_extreme_point",
    "lemma_check",
    "lp_image_check",
    "op_norm",
    "parse_scalar",
    "polar_dual",
    "span_check",
    "sqrt",
    "validate",
    "verify_theorem_precondition",
    "weak_lp_holds",
]

__version__ = "0.1.0"
