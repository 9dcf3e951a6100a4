"""Command-line front end.

All results go to stdout as canonically ordered JSON; logging goes to
stderr.  Exit status: 0 on success / property holds, 1 when an audited
property or lemma fails (or ``--expect-extreme`` is not met), 2 on errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import catalog
from .audit import audit_pair, lemma_check
from .enumeration import brute_force_vertices, build_ball, enumerate_vertices
from .errors import PolyContractError, TheoremViolation
from .extremal import check_certificate, is_extreme, lp_image_check, span_check, weak_lp_holds
from .operator import attainment_set, op_norm
from .scalar import format_scalar
from .serialize import (
    certificate_to_json,
    dumps,
    lemma_report_to_json,
    operator_to_json,
    report_to_json,
    resolve_operator,
    resolve_space,
    space_to_json,
    vertex_set_to_json,
)

log = logging.getLogger("polycontract")


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def cmd_norm(args) -> int:
    T = resolve_operator(args.operator)
    norm = op_norm(T)
    out = {"op_norm": format_scalar(norm), "operator": operator_to_json(T)}
    out["attainment_set"] = [[format_scalar(c) for c in x] for x in attainment_set(T)] if norm else []
    _emit(out)
    return 0


def cmd_extremal(args) -> int:
    T = resolve_operator(args.operator)
    cert = is_extreme(T)
    weak = weak_lp_holds(T)
    out = {
        "certificate": certificate_to_json(cert),
        "certificate_valid": check_certificate(cert),
        "op_norm": format_scalar(op_norm(T)),
        "weak_lp": {
            "holds": weak.holds,
            "witness": [format_scalar(c) for c in weak.witness] if weak.witness else None,
        },
        "lp_image": lp_image_check(T),
    }
    if op_norm(T) == 1:
        out["span"] = span_check(T)
    _emit(out)
    if args.expect_extreme and not cert.is_extreme:
        return 1
    return 0


def cmd_enumerate(args) -> int:
    ball = build_ball(resolve_space(args.domain), resolve_space(args.codomain))
    V = enumerate_vertices(ball)
    out = vertex_set_to_json(V, count_only=args.count_only)
    status = 0
    if args.oracle:
        W = brute_force_vertices(ball)
        agrees = V.as_set() == W.as_set()
        out["oracle"] = {"count": W.count, "agrees": agrees}
        if not agrees:
            status = 1
            out["discrepancy"] = {
                "only_enumeration": [certificate_to_json(is_extreme(T)) for T in sorted(V.as_set() - W.as_set())],
                "only_oracle": [certificate_to_json(is_extreme(T)) for T in sorted(W.as_set() - V.as_set())],
            }
    _emit(out)
    return status


def cmd_audit(args) -> int:
    X, Y = resolve_space(args.domain), resolve_space(args.codomain)
    try:
        report = audit_pair(X, Y, args.property)
    except TheoremViolation as exc:
        _emit({"error": {"type": "TheoremViolation", "message": str(exc),
                         "report": report_to_json(exc.report, limit=None)}})
        return 2
    if args.violations_out:
        Path(args.violations_out).write_text(dumps(report_to_json(report, limit=None)) + "\n")
    _emit(report_to_json(report))
    return 0 if report.holds else 1


def cmd_lemma(args) -> int:
    report = lemma_check(args.m, args.k, args.claim)
    _emit(lemma_report_to_json(report))
    return 0 if report.holds else 1


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit({
            "spaces": {n: catalog.SPACES[n].provenance for n in sorted(catalog.SPACES)},
            "operators": {n: catalog.OPERATORS[n].provenance for n in sorted(catalog.OPERATORS)},
        })
        return 0
    if not args.name:
        raise ValueError("catalog show needs a NAME")
    if args.name in catalog.OPERATORS:
        _emit(operator_to_json(catalog.get_operator(args.name)))
    else:
        _emit(space_to_json(catalog.get_space(args.name)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polycontract", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="exact operator norm and norm-attaining extreme points")
    p.add_argument("--operator", required=True, help="JSON file, catalog:NAME or NAME")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("extremal", help="extremality certificate and L-P predicates")
    p.add_argument("--operator", required=True)
    p.add_argument("--expect-extreme", action="store_true", help="exit 1 unless the verdict is Extreme")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("enumerate", help="all extreme contractions between two spaces")
    p.add_argument("--domain", required=True)
    p.add_argument("--codomain", required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("audit", help="weak L-P / L-P audit over all extreme contractions")
    p.add_argument("--domain", required=True)
    p.add_argument("--codomain", required=True)
    p.add_argument("--property", required=True, choices=["weak-lp", "lp"])
    p.add_argument("--violations-out", help="write the full report, all violations included, here")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("lemma", help="exhaustive check of the support-set lemma")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--claim", required=True, choices=["i", "ii"])
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("catalog", help="built-in spaces and operators")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (PolyContractError, ValueError, KeyError, OSError) as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
