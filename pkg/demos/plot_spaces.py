"""
Polygonal spaces, facets and the gauge norm
===========================================

A space is given by half of its extreme points. The facet functionals
come from polar duality, and the norm of a vector is the largest facet
value.
"""

from polycontract import catalog
from polycontract.scalar import format_scalar
from polycontract.space import PolygonalSpace, affine_dependence, gauge

hexagon = catalog.get_space("hexagon")
for g in hexagon.generators:
    print("generator", [format_scalar(c) for c in g])
for f in hexagon.facets:
    print("facet", [format_scalar(c) for c in f])

# the hexagon norm of (0, 1) is 2/sqrt(3)
print(format_scalar(gauge(hexagon, [0, 1])))

# x3 = x2 - x1 is the affine dependence behind the counting result
dep = affine_dependence(hexagon)
print(dep.basis, dep.dependent, dep.alphas)

# a generator inside the hull of the others is rejected with a witness
try:
    PolygonalSpace([[1, 0], [0, 1], ["1/4", "1/4"]])
except Exception as exc:
    print(type(exc).__name__, exc.witness)
