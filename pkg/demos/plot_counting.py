"""
Counting extreme contractions
=============================

The unit ball of L(X, Y) is a polytope in matrix space. Its vertices are
enumerated with the double description method and cross-checked against
a brute-force search over tight constraint subsets.
"""

from polycontract import catalog
from polycontract.enumeration import brute_force_vertices, build_ball, enumerate_vertices

hexagon, linf2 = catalog.get_space("hexagon"), catalog.get_space("linf2")
ball = build_ball(hexagon, linf2)
print("dimension", ball.dim, "halfspaces", len(ball.halfspaces))

V = enumerate_vertices(ball)
print("vertices", V.count)
print("brute force agrees", V.as_set() == brute_force_vertices(ball).as_set())

# a rational hexagon that is a linear image of the regular one has the same count
affine = catalog.get_space("affine_hexagon")
print("affine hexagon", enumerate_vertices(build_ball(affine, linf2)).count)

for a, b in [("octagon", "linf2"), ("hexagon", "linf3"), ("xp8", "l1_2")]:
    X, Y = catalog.get_space(a), catalog.get_space(b)
    print(a, "->", b, enumerate_vertices(build_ball(X, Y)).count)
