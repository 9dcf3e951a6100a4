"""
Exact arithmetic in quadratic fields
====================================

Every coordinate in this library is a number a + b*sqrt(d) with rational
a and b. Signs and comparisons are decided exactly, never with floats.
"""

from polycontract.scalar import Scalar, format_scalar, parse_scalar, sqrt

# sqrt(12) is stored in reduced form as 2*sqrt(3)
r = sqrt(12)
print(format_scalar(r))

# field arithmetic stays inside Q(sqrt(3))
x = parse_scalar("1/2+1/2*sqrt(3)")
print(format_scalar(x * x), format_scalar(1 / x))

# the sign of 1 - sqrt(2) comes from comparing 1 with 2, not from a float
y = parse_scalar("1-sqrt(2)")
print(y.sign(), y < 0)

# mixing two different radicals is refused
try:
    sqrt(2) + sqrt(3)
except Exception as exc:
    print(type(exc).__name__, exc)

# rationals fit into any field
print(format_scalar(Scalar(3, 0) + sqrt(2)))
