"""
Auditing the weak L-P property
==============================

A pair (X, Y) has the weak L-P property when every extreme contraction
sends at least one extreme point of X to an extreme point of Y. The audit
checks every vertex of the contraction ball.
"""

from polycontract import catalog
from polycontract.audit import audit_pair, lemma_check, verify_theorem_precondition

S = catalog.get_space
for dom, cod in [("hexagon", "linf2"), ("hexagon", "l1_2"), ("hexagon", "linf3"), ("octagon", "linf2")]:
    report = audit_pair(S(dom), S(cod), "weak-lp")
    print(f"{dom} -> {cod}: {report.verdict}, {report.vertex_count} vertices, "
          f"{len(report.violations)} violations")

# the first failing pair contains ex1 among its violations
report = audit_pair(S("hexagon"), S("linf3"), "weak-lp")
ex1 = catalog.get_operator("ex1")
print("ex1 found", any(v.operator in (ex1, -ex1) for v in report.violations))

# the theorem hypotheses hold for linf2 but not for linf3
print(verify_theorem_precondition(S("hexagon"), S("linf2"), "th1"))
print(verify_theorem_precondition(S("hexagon"), S("linf3"), "th1"))

# the combinatorial lemma behind the l1 case, checked exhaustively
for m, k, claim in [(3, 7, "i"), (3, 6, "ii"), (4, 13, "i")]:
    rep = lemma_check(m, k, claim)
    print(m, k, claim, rep.holds, rep.families_checked)
