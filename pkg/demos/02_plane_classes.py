"""Which planes carry lattice equilateral triangles?

The normal (a, b, c) of any such plane solves a^2 + b^2 + c^2 = 3 d^2.
"""
from eqlattice.diophantine import (
    count_ordered,
    count_primitive,
    invert_param,
    param_from_inverse,
    pell_family,
    primitive_solutions,
)
from eqlattice.symmetry import orbit_expand

# The first few odd d and their primitive normalized classes 0 < a <= b <= c.
for d in range(1, 22, 2):
    print(f"d={d:2d}", [p.normal for p in primitive_solutions(d)])

# Counting grows irregularly with the factorization of d.
print("\nd=1003: normalized", count_primitive(1003), "ordered", count_ordered(1003))

# Every class has a rational parametrization; invert it and go back.
p = primitive_solutions(9)[1]
inv = invert_param(p)
print("\n(5,7,13,9) inverse parameters:", inv)
print("back again:", param_from_inverse(inv))

# The cube symmetries spread a class over up to 24 distinct planes.
for normal in [(1, 1, 1), (1, 1, 5), (5, 7, 13)]:
    print(normal, "->", len(orbit_expand(normal)), "planes")

# A chain of classes (1, 1, c) with growing d, from a Pell-type recurrence.
print("\n(1, 1, c) chain:", pell_family(1, 1, 5))
