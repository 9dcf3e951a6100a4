"""
Extremality certificates
========================

An operator of norm one is extreme when the constraints it makes tight
span the whole matrix space. Otherwise a direction D along which it can
move both ways is returned, with T = (T + eps*D)/2 + (T - eps*D)/2.
"""

from fractions import Fraction

from polycontract import catalog
from polycontract.extremal import check_certificate, is_extreme, weak_lp_holds
from polycontract.operator import apply, op_norm
from polycontract.scalar import format_scalar

ex1 = catalog.get_operator("ex1")
print("op_norm", op_norm(ex1))

# ex1 maps every extreme point of the hexagon to a non-extreme point of the cube
for x in ex1.domain.generators:
    print([format_scalar(c) for c in x], "->", [format_scalar(c) for c in apply(ex1, x)])

cert = is_extreme(ex1)
print(cert.verdict, cert.spanning, format_scalar(cert.determinant))
print("re-check", check_certificate(cert), "weak L-P", weak_lp_holds(ex1).holds)

# half of ex1 lies inside the ball, so it splits into two contractions
half = is_extreme(ex1 * Fraction(1, 2))
print(half.verdict, format_scalar(half.epsilon), check_certificate(half))
