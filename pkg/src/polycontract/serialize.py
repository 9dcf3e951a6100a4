"""JSON encodings of spaces, operators, certificates and reports.

Every number is written as a scalar literal string (``"1/2+1/2*sqrt(3)"``)
so documents are exact, diffable and re-checkable by other tools.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import catalog
from .audit import AuditReport, LemmaReport, Violation
from .enumeration import VertexSet
from .extremal import ExtremalityCertificate
from .operator import ActiveSet, Operator, from_images
from .scalar import Scalar, format_scalar, parse_scalar
from .space import PolygonalSpace

INLINE_VIOLATIONS = 20


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _lits(v) -> list[str]:
    return [format_scalar(x) for x in v]


def _matrix(M) -> list[list[str]]:
    return [_lits(row) for row in M]


def _parse_vec(v) -> list[Scalar]:
    return [parse_scalar(str(x)) for x in v]


# -- spaces ----------------------------------------------------------------


def space_to_json(X: PolygonalSpace) -> dict:
    return {
        "name": X.name or "",
        "dimension": X.n,
        "field": {"d": X.field.d},
        "generators": _matrix(X.generators),
    }


def space_from_json(data: dict) -> PolygonalSpace:
    gens = [_parse_vec(g) for g in data["generators"]]
    X = PolygonalSpace(gens, name=data.get("name") or None)
    if "dimension" in data and data["dimension"] != X.n:
        raise ValueError(f"declared dimension {data['dimension']} but generators have length {X.n}")
    d = data.get("field", {}).get("d", X.field.d)
    if X.field.d not in (1, d):
        raise ValueError(f"declared field sqrt({d}) but entries use sqrt({X.field.d})")
    return X


def _load_json(path: str) -> dict:
    return json.loads(Path(path).read_text())


def resolve_space(ref: str | dict) -> PolygonalSpace:
    """A catalog name (optionally ``catalog:``-prefixed), a JSON file path, or an inline dict."""
    if isinstance(ref, dict):
        return space_from_json(ref)
    name = ref[len("catalog:"):] if ref.startswith("catalog:") else ref
    if not ref.startswith("catalog:") and Path(ref).is_file():
        return space_from_json(_load_json(ref))
    return catalog.get_space(name)


# -- operators -------------------------------------------------------------


def operator_to_json(T: Operator) -> dict:
    return {
        "domain": space_to_json(T.domain),
        "codomain": space_to_json(T.codomain),
        "matrix": _matrix(T.matrix),
    }


def operator_from_json(data: dict) -> Operator:
    X = resolve_space(data["domain"])
    Y = resolve_space(data["codomain"])
    if "matrix" in data:
        return Operator([_parse_vec(r) for r in data["matrix"]], X, Y)
    if "images" in data:
        return from_images(X, Y, [_parse_vec(r) for r in data["images"]])
    raise ValueError("operator document needs 'matrix' or 'images'")


def resolve_operator(ref: str) -> Operator:
    if ref.startswith("catalog:"):
        return catalog.get_operator(ref[len("catalog:"):])
    if Path(ref).is_file():
        return operator_from_json(_load_json(ref))
    return catalog.get_operator(ref)


# -- certificates ----------------------------------------------------------


def certificate_to_json(cert: ExtremalityCertificate, include_operator: bool = True) -> dict:
    out: dict[str, Any] = {
        "verdict": cert.verdict,
        "active_pairs": [list(p) for p in cert.active],
    }
    if include_operator:
        out["operator"] = operator_to_json(cert.operator)
    if cert.is_extreme:
        out["spanning"] = [list(p) for p in cert.spanning]
        out["determinant"] = format_scalar(cert.determinant)
    else:
        out["direction"] = _matrix(cert.direction.matrix)
        out["epsilon"] = format_scalar(cert.epsilon)
        out["t1"] = _matrix(cert.t1.matrix)
        out["t2"] = _matrix(cert.t2.matrix)
    return out


def certificate_from_json(data: dict, operator: Operator | None = None) -> ExtremalityCertificate:
    T = operator if operator is not None else operator_from_json(data["operator"])
    X, Y = T.domain, T.codomain
    active = ActiveSet(tuple(tuple(p) for p in data["active_pairs"]))
    if data["verdict"] == "Extreme":
        return ExtremalityCertificate(
            "Extreme", T, active,
            spanning=tuple(tuple(p) for p in data["spanning"]),
            determinant=parse_scalar(data["determinant"]),
        )

    def op(key: str) -> Operator:
        return Operator([_parse_vec(r) for r in data[key]], X, Y)

    return ExtremalityCertificate(
        "NotExtreme", T, active,
        direction=op("direction"),
        epsilon=parse_scalar(data["epsilon"]),
        t1=op("t1"),
        t2=op("t2"),
    )


# -- enumeration and audits ------------------------------------------------


def vertex_set_to_json(V: VertexSet, count_only: bool = False) -> dict:
    if count_only:
        return {"count": V.count}
    return {"count": V.count, "vertices": [_matrix(T.matrix) for T in V]}


def violation_to_json(v: Violation) -> dict:
    return {
        "kind": v.kind,
        "operator": _matrix(v.operator.matrix),
        "certificate": certificate_to_json(v.certificate, include_operator=False),
        "images": [[_lits(x), _lits(y)] for x, y in v.images],
    }


def report_to_json(report: AuditReport, limit: int | None = INLINE_VIOLATIONS) -> dict:
    shown = report.violations if limit is None else report.violations[:limit]
    return {
        "domain": report.domain,
        "codomain": report.codomain,
        "property": report.property,
        "vertex_count": report.vertex_count,
        "verdict": report.verdict,
        "violation_count": len(report.violations),
        "violations": [violation_to_json(v) for v in shown],
        "truncated": len(shown) < len(report.violations),
        "preconditions": dict(report.preconditions),
        "span_failures": report.span_failures,
    }


def lemma_report_to_json(report: LemmaReport, limit: int = INLINE_VIOLATIONS) -> dict:
    return {
        "m": report.m,
        "k": report.k,
        "claim": report.claim,
        "verdict": "holds" if report.holds else "fails",
        "families_checked": report.families_checked,
        "counterexample": [list(s) for s in report.counterexample] if report.counterexample else None,
        "surviving_count": len(report.surviving),
        "surviving": [[list(s) for s in fam] for fam in report.surviving[:limit]],
    }
